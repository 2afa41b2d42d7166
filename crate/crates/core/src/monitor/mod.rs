//! Six-valued monitors: construction from LTL, output refinement, and
//! execution on finite words.

mod cubes;
mod render;

pub use render::RenderFormat;

use crate::automata::{ltl_to_nba, minimize, nba_to_dfa, product_monitor, Fsm3, Verdict3};
use crate::error::Error;
use crate::ltl::{Alphabet, FiniteWord, Formula, Symbol};

/// The six truth values. `True`/`False` are final: once a monitor
/// reaches them every continuation keeps the verdict. Via the monitor,
/// each value also names the class of the finite words reaching it:
/// good, bad, positive, negative, neutral and ugly prefixes
/// respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict6 {
    /// ⊤ — reached by good prefixes; every extension satisfies.
    True,
    /// ⊥ — reached by bad prefixes; every extension violates.
    False,
    /// ∓ — some extension reaches ⊤, none reaches ⊥.
    PossiblyTrue,
    /// ± — some extension reaches ⊥, none reaches ⊤.
    PossiblyFalse,
    /// + — extensions reach both ⊤ and ⊥.
    PossiblyConclusive,
    /// × — no extension reaches ⊤ or ⊥.
    Inconclusive,
}

impl Verdict6 {
    /// Machine-readable spelling used in the JSON schema.
    pub fn name(self) -> &'static str {
        match self {
            Verdict6::True => "true",
            Verdict6::False => "false",
            Verdict6::PossiblyTrue => "possibly_true",
            Verdict6::PossiblyFalse => "possibly_false",
            Verdict6::PossiblyConclusive => "possibly_conclusive",
            Verdict6::Inconclusive => "inconclusive",
        }
    }

    /// True for the final verdicts ⊤ and ⊥.
    pub fn is_final(self) -> bool {
        matches!(self, Verdict6::True | Verdict6::False)
    }

    /// The value of the monitor of the negated formula at the same word:
    /// ⊤↔⊥ and ∓↔± swap; + and × are self-dual.
    pub fn dual(self) -> Verdict6 {
        match self {
            Verdict6::True => Verdict6::False,
            Verdict6::False => Verdict6::True,
            Verdict6::PossiblyTrue => Verdict6::PossiblyFalse,
            Verdict6::PossiblyFalse => Verdict6::PossiblyTrue,
            Verdict6::PossiblyConclusive => Verdict6::PossiblyConclusive,
            Verdict6::Inconclusive => Verdict6::Inconclusive,
        }
    }
}

impl std::fmt::Display for Verdict6 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict6::True => write!(f, "⊤"),
            Verdict6::False => write!(f, "⊥"),
            Verdict6::PossiblyTrue => write!(f, "∓"),
            Verdict6::PossiblyFalse => write!(f, "±"),
            Verdict6::PossiblyConclusive => write!(f, "+"),
            Verdict6::Inconclusive => write!(f, "×"),
        }
    }
}

/// A deterministic, total, minimized monitor with six-valued outputs.
///
/// States are numbered canonically: breadth-first from the initial
/// state, exploring symbols in the lexicographic order of their
/// proposition sets. Two monitors built from the same formula render
/// byte-identically, and structural equality is graph isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monitor {
    formula: String,
    alphabet: Alphabet,
    transitions: Vec<Vec<u32>>,
    initial: u32,
    outputs: Vec<Verdict6>,
    outputs3: Vec<Verdict3>,
    names: Vec<String>,
}

/// Runs the construction pipeline up to the minimized three-valued
/// monitor: NBAs for the formula and its negation, nonemptiness marks,
/// two prefix DFAs, their product, and Moore minimization.
///
/// The result satisfies `output_after(u) = [u ⊨ L(f)]₃` for every
/// finite word `u` over the formula's alphabet.
pub fn build_monitor3(f: &Formula) -> Result<Fsm3, Error> {
    let alphabet = f.alphabet()?;
    let nba_pos = ltl_to_nba(f, &alphabet).with_nonempty_marks();
    let nba_neg = ltl_to_nba(&f.clone().negate(), &alphabet).with_nonempty_marks();
    let dfa_pos = nba_to_dfa(&nba_pos);
    let dfa_neg = nba_to_dfa(&nba_neg);
    let product = product_monitor(&dfa_pos, &dfa_neg)?;
    Ok(minimize(&product))
}

/// Refines a three-valued monitor to the six-valued monitor.
///
/// Two backward reachability passes over the reversed transition graph
/// (one from the ⊤ states, one from the ⊥ states) decide, per state,
/// which final verdicts remain reachable; the output follows by case
/// split. Linear in `|Q| · |Σ|`.
pub fn refine_to_six(m: &Fsm3) -> Monitor {
    let n = m.state_count();
    let alphabet = m.alphabet().clone();

    let mut reverse: Vec<Vec<u32>> = vec![Vec::new(); n];
    for q in 0..n as u32 {
        for s in alphabet.symbols() {
            reverse[m.step(q, s) as usize].push(q);
        }
    }
    let backward_closure = |seed: Verdict3| -> Vec<bool> {
        let mut hit: Vec<bool> = (0..n).map(|q| m.output(q as u32) == seed).collect();
        let mut queue: Vec<u32> = (0..n as u32).filter(|&q| hit[q as usize]).collect();
        while let Some(q) = queue.pop() {
            for &p in &reverse[q as usize] {
                if !hit[p as usize] {
                    hit[p as usize] = true;
                    queue.push(p);
                }
            }
        }
        hit
    };
    let reaches_true = backward_closure(Verdict3::True);
    let reaches_false = backward_closure(Verdict3::False);

    let outputs6: Vec<Verdict6> = (0..n)
        .map(|q| match m.output(q as u32) {
            Verdict3::True => Verdict6::True,
            Verdict3::False => Verdict6::False,
            Verdict3::Inconclusive => match (reaches_true[q], reaches_false[q]) {
                (true, false) => Verdict6::PossiblyTrue,
                (false, true) => Verdict6::PossiblyFalse,
                (true, true) => Verdict6::PossiblyConclusive,
                (false, false) => Verdict6::Inconclusive,
            },
        })
        .collect();

    // canonical renumbering: BFS from the initial state, symbols in
    // lexicographic proposition-set order
    let order = alphabet.ordered_symbols();
    let mut canonical = vec![u32::MAX; n];
    let mut bfs: Vec<u32> = Vec::with_capacity(n);
    canonical[m.initial_state() as usize] = 0;
    bfs.push(m.initial_state());
    let mut head = 0;
    while head < bfs.len() {
        let q = bfs[head];
        head += 1;
        for &s in &order {
            let t = m.step(q, s);
            if canonical[t as usize] == u32::MAX {
                canonical[t as usize] = bfs.len() as u32;
                bfs.push(t);
            }
        }
    }
    debug_assert!(
        canonical.iter().all(|&c| c != u32::MAX),
        "monitor has unreachable states"
    );

    let mut transitions = vec![Vec::new(); n];
    let mut outputs = vec![Verdict6::Inconclusive; n];
    let mut outputs3 = vec![Verdict3::Inconclusive; n];
    for q in 0..n {
        let c = canonical[q] as usize;
        transitions[c] = alphabet
            .symbols()
            .map(|s| canonical[m.step(q as u32, s) as usize])
            .collect();
        outputs[c] = outputs6[q];
        outputs3[c] = m.output(q as u32);
    }

    Monitor {
        formula: String::new(),
        alphabet,
        transitions,
        initial: 0,
        outputs,
        outputs3,
        names: (0..n).map(|i| format!("q{i}")).collect(),
    }
}

impl Monitor {
    /// Full pipeline: three-valued construction, minimization, and
    /// six-valued refinement.
    pub fn from_formula(f: &Formula) -> Result<Monitor, Error> {
        let mut monitor = refine_to_six(&build_monitor3(f)?);
        monitor.formula = f.to_string();
        monitor
            .check_consistency()
            .map_err(Error::Internal)?;
        Ok(monitor)
    }

    pub fn parse_and_build(text: &str) -> Result<Monitor, Error> {
        let f: Formula = text.parse().map_err(Error::Parse)?;
        Monitor::from_formula(&f)
    }

    /// Source formula in canonical rendering; empty for monitors not
    /// built from a formula.
    pub fn formula(&self) -> &str {
        &self.formula
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial_state(&self) -> u32 {
        self.initial
    }

    pub fn states(&self) -> impl Iterator<Item = u32> {
        0..self.state_count() as u32
    }

    pub fn step(&self, q: u32, s: Symbol) -> u32 {
        self.transitions[q as usize][s.bits() as usize]
    }

    pub fn output(&self, q: u32) -> Verdict6 {
        self.outputs[q as usize]
    }

    /// The underlying three-valued output.
    pub fn output3(&self, q: u32) -> Verdict3 {
        self.outputs3[q as usize]
    }

    pub fn state_name(&self, q: u32) -> &str {
        &self.names[q as usize]
    }

    /// The verdict after reading `u` from the initial state; reading the
    /// empty word returns the initial state's output.
    ///
    /// The word may be over a different alphabet as long as every
    /// proposition that actually occurs in it is known to the monitor;
    /// otherwise the offending event is reported.
    pub fn read_word(&self, u: &FiniteWord) -> Result<Verdict6, Error> {
        Ok(self.output(self.state_after(u)?))
    }

    /// The state reached after reading `u`.
    pub fn state_after(&self, u: &FiniteWord) -> Result<u32, Error> {
        let mut q = self.initial;
        if u.alphabet() == &self.alphabet {
            for &s in u.symbols() {
                q = self.step(q, s);
            }
            return Ok(q);
        }
        // remap symbols by proposition name
        let other = u.alphabet();
        let mapping: Vec<Option<usize>> = other
            .propositions()
            .iter()
            .map(|p| self.alphabet.index_of(p.name()))
            .collect();
        for &s in u.symbols() {
            let mut bits = 0u64;
            let mut unknown = Vec::new();
            for (i, target) in mapping.iter().enumerate() {
                if s.contains(i) {
                    match target {
                        Some(t) => bits |= 1 << t,
                        None => unknown.push(other.propositions()[i].name().to_string()),
                    }
                }
            }
            if !unknown.is_empty() {
                return Err(Error::UnknownSymbol {
                    symbol: other.names_of(s),
                    unknown,
                });
            }
            q = self.step(q, Symbol(bits));
        }
        Ok(q)
    }

    /// Verifies the structural invariants of a six-valued monitor:
    /// totality, reachability (by construction), absorption of the final
    /// verdicts, and the output/reachability correspondence.
    pub fn check_consistency(&self) -> Result<(), String> {
        let n = self.state_count();
        for q in 0..n as u32 {
            if self.transitions[q as usize].len() != self.alphabet.symbol_count() {
                return Err(format!("state {q} is not total"));
            }
            for s in self.alphabet.symbols() {
                let t = self.step(q, s);
                if t as usize >= n {
                    return Err(format!("dangling transition from state {q}"));
                }
                let (o, to) = (self.output(q), self.output(t));
                if o == Verdict6::True && to != Verdict6::True {
                    return Err(format!("⊤ state {q} reaches non-⊤ state {t}"));
                }
                if o == Verdict6::False && to != Verdict6::False {
                    return Err(format!("⊥ state {q} reaches non-⊥ state {t}"));
                }
            }
        }
        Ok(())
    }

    /// Serialized form; see [`RenderFormat`].
    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Dot => render::to_dot(self),
            RenderFormat::Json => render::to_json(self),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monitor(text: &str) -> Monitor {
        Monitor::parse_and_build(text).unwrap()
    }

    fn outputs_sorted(m: &Monitor) -> Vec<Verdict6> {
        let mut v: Vec<Verdict6> = m.states().map(|q| m.output(q)).collect();
        v.sort();
        v
    }

    #[test]
    fn simple_monitor_shapes() {
        let m = monitor("true");
        assert_eq!(m.state_count(), 1);
        assert_eq!(m.output(0), Verdict6::True);

        let m = monitor("p U q");
        assert_eq!(m.state_count(), 3);
        assert_eq!(
            outputs_sorted(&m),
            vec![Verdict6::True, Verdict6::False, Verdict6::PossiblyConclusive]
        );

        let m = monitor("G F p");
        assert_eq!(m.state_count(), 1);
        assert_eq!(m.output(0), Verdict6::Inconclusive);
    }

    #[test]
    fn refinement_examples() {
        // G p: the pending state only has bad extensions
        let m = monitor("G p");
        assert_eq!(m.output(m.initial_state()), Verdict6::PossiblyFalse);
        // F p: dually, only good extensions
        let m = monitor("F p");
        assert_eq!(m.output(m.initial_state()), Verdict6::PossiblyTrue);
    }

    #[test]
    fn phi6_has_four_states_with_expected_outputs() {
        let m = monitor("G F r || (!n -> X !b)");
        assert_eq!(m.state_count(), 4);
        assert_eq!(
            outputs_sorted(&m),
            vec![
                Verdict6::True,
                Verdict6::PossiblyTrue,
                Verdict6::PossiblyTrue,
                Verdict6::Inconclusive
            ]
        );
    }

    #[test]
    fn phi6_word_examples() {
        let m = monitor("G F r || (!n -> X !b)");
        let a = m.alphabet().clone();
        let n = FiniteWord::from_names(&a, [["n"]]).unwrap();
        assert_eq!(m.read_word(&n).unwrap(), Verdict6::True);
        let into_x = FiniteWord::from_names(&a, [vec![], vec!["b"]]).unwrap();
        assert_eq!(m.read_word(&into_x).unwrap(), Verdict6::Inconclusive);
        let empty = FiniteWord::empty(a);
        assert_eq!(m.read_word(&empty).unwrap(), Verdict6::PossiblyTrue);
    }

    #[test]
    fn read_word_rejects_foreign_propositions() {
        let m = monitor("p U q");
        let other = crate::ltl::Alphabet::new([
            crate::ltl::AtomicProposition::new("p"),
            crate::ltl::AtomicProposition::new("zz"),
        ])
        .unwrap();
        let w = FiniteWord::from_names(&other, [["zz"]]).unwrap();
        let err = m.read_word(&w).unwrap_err();
        assert!(err.to_string().contains("zz"), "{err}");
        // foreign alphabet is fine while the unknown proposition stays unset
        let w = FiniteWord::from_names(&other, [["p"]]).unwrap();
        assert_eq!(m.read_word(&w).unwrap(), m.read_word(
            &FiniteWord::from_names(m.alphabet(), [["p"]]).unwrap()
        ).unwrap());
    }

    #[test]
    fn monitors_of_same_formula_are_equal() {
        let a = monitor("(r && F u) -> ((!b && !u) U n) U u");
        let b = monitor("(r && F u) -> ((!b && !u) U n) U u");
        assert_eq!(a, b);
    }
}
