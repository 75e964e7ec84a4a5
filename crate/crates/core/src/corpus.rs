//! Small-graph corpora: the embedded file of all connected graphs on at
//! most six vertices, and an enumerator for the same classes.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// Largest order accepted by [`canonical_code`] (it tries every permutation).
pub const CANONICAL_MAX: usize = 8;

static CORPUS6: &str = include_str!("../data/corpus6.g6");

/// Every connected graph on 1 to 6 vertices up to isomorphism, by order,
/// in the file's order.
pub fn corpus6() -> Vec<Graph> {
    parse_lines(CORPUS6).expect("embedded corpus parses").into_iter().map(|(_, g)| g).collect()
}

/// One graph per nonblank line, paired with its 1-based line number.
/// Parse errors name the offending line.
pub fn parse_lines(text: &str) -> Result<Vec<(usize, Graph)>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map(|g| (i + 1, g)).map_err(|e| match e {
                Error::Graph6(msg) => Error::Graph6(format!("line {}: {msg}", i + 1)),
                other => Error::Graph6(format!("line {}: {other}", i + 1)),
            })
        })
        .collect()
}

#[allow(clippy::needless_range_loop)]
fn pair_index(n: usize) -> Vec<Vec<u32>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    // Heap's algorithm.
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Least adjacency code over all relabelings; equal exactly for isomorphic
/// graphs of the same order.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > CANONICAL_MAX {
        return Err(Error::InvalidArgument(format!("canonical form limited to {CANONICAL_MAX} vertices")));
    }
    let idx = pair_index(n);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = u64::MAX;
    for_each_permutation(n, |p| {
        let code = edges.iter().fold(0u64, |c, &(u, v)| c | 1 << idx[p[u]][p[v]]);
        best = best.min(code);
    });
    Ok(best)
}

/// The canonically relabeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(from_code(g.n(), canonical_code(g)?))
}

#[allow(clippy::needless_range_loop)]
fn from_code(n: usize, code: u64) -> Graph {
    let idx = pair_index(n);
    let mut g = Graph::empty(n).expect("small");
    for j in 1..n {
        for i in 0..j {
            if code >> idx[i][j] & 1 == 1 {
                g.add_edge(i, j).expect("simple");
            }
        }
    }
    g
}

/// All connected graphs on `n` vertices up to isomorphism, in canonical
/// labeling, ordered by code.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// each class on `n` vertices arises by attaching a vertex to a class on
/// `n - 1`.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CANONICAL_MAX {
        return Err(Error::InvalidArgument(format!("enumeration limited to {CANONICAL_MAX} vertices")));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &codes {
            let base = from_code(m - 1, code);
            for mask in 1u32..1 << (m - 1) {
                let mut g = Graph::empty(m)?;
                for (u, v) in base.edges() {
                    g.add_edge(u, v)?;
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        g.add_edge(u, m - 1)?;
                    }
                }
                next.insert(canonical_code(&g)?);
            }
        }
        codes = next;
    }
    Ok(codes.into_iter().map(|c| from_code(n, c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    #[test]
    fn counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn embedded_corpus_matches_enumeration() {
        let corpus = corpus6();
        assert_eq!(corpus.len(), 143);
        for n in 1..=6 {
            let from_file: BTreeSet<u64> =
                corpus.iter().filter(|g| g.n() == n).map(|g| canonical_code(g).unwrap()).collect();
            let generated: BTreeSet<u64> =
                connected_graphs(n).unwrap().iter().map(|g| canonical_code(g).unwrap()).collect();
            assert_eq!(from_file, generated, "n = {n}");
            assert_eq!(corpus.iter().filter(|g| g.n() == n).count(), generated.len());
        }
        assert!(corpus.iter().all(Graph::is_connected));
    }

    #[test]
    fn canonical_code_is_invariant() {
        let a = path(4).unwrap();
        let b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        assert_ne!(canonical_code(&a).unwrap(), canonical_code(&cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_lines("A_\n\n!!\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }
}
