//! Iterative Tarjan strongly connected components.
//!
//! Iterative so that deep automaton graphs cannot overflow the stack.
//! Components are returned in reverse topological order (sinks first).

pub(crate) fn tarjan_scc(adj: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut next_index = 0usize;
    let mut sccs: Vec<Vec<u32>> = Vec::new();

    // (node, next edge offset)
    let mut call: Vec<(u32, usize)> = Vec::new();

    for root in 0..n as u32 {
        if index[root as usize] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            let vi = v as usize;
            if *edge == 0 {
                index[vi] = next_index;
                lowlink[vi] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[vi] = true;
            }
            let mut recursed = false;
            while *edge < adj[vi].len() {
                let w = adj[vi][*edge] as usize;
                *edge += 1;
                if index[w] == usize::MAX {
                    call.push((w as u32, 0));
                    recursed = true;
                    break;
                } else if on_stack[w] {
                    lowlink[vi] = lowlink[vi].min(index[w]);
                }
            }
            if recursed {
                continue;
            }
            // all edges done
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                let pi = parent as usize;
                lowlink[pi] = lowlink[pi].min(lowlink[vi]);
            }
            if lowlink[vi] == index[vi] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w as usize] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                sccs.push(comp);
            }
        }
    }
    sccs
}
