//! Exhaustive enumeration of small graphs.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::patterns::is_in_class;

/// Pairs `(u, v)`, `u < v`, in the bit order used by edge codes.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

fn from_code(n: usize, code: u64) -> Graph {
    let edges: Vec<_> =
        pairs(n).into_iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, e)| e).collect();
    Graph::new(n, &edges).expect("decoded edges are valid")
}

/// Every labelled graph on `n <= 11` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "labelled enumeration is limited to 11 vertices");
    let m = n * n.saturating_sub(1) / 2;
    (0u64..1 << m).map(move |code| from_code(n, code))
}

/// Calls `visit` on every permutation of `items`, in place (Heap's
/// algorithm).
fn for_each_permutation(items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    let n = items.len();
    visit(items);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The largest edge code over all relabellings that list vertices by
/// nonincreasing degree. That set of relabellings is itself invariant under
/// isomorphism, so the code is canonical. Meant for `n <= 8`.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let pairs = pairs(n);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // cells of equal degree, as ranges of positions
    let mut cells = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || g.degree(by_degree[i]) != g.degree(by_degree[start]) {
            cells.push(start..i);
            start = i;
        }
    }
    let code = |perm: &[usize]| {
        pairs.iter().enumerate().fold(0u64, |acc, (i, &(u, v))| {
            if g.adjacent(perm[u], perm[v]) {
                acc | 1 << i
            } else {
                acc
            }
        })
    };
    let mut best = 0;
    fn product(
        perm: &mut Vec<usize>,
        cells: &[std::ops::Range<usize>],
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let Some((cell, rest)) = cells.split_first() else {
            visit(perm);
            return;
        };
        let mut members = perm[cell.clone()].to_vec();
        for_each_permutation(&mut members, &mut |order| {
            perm[cell.clone()].copy_from_slice(order);
            product(perm, rest, visit);
        });
    }
    let mut perm = by_degree;
    product(&mut perm, &cells, &mut |p| best = best.max(code(p)));
    best
}

/// Graphs satisfying the hereditary property `keep`, up to isomorphism,
/// indexed by order `0..=max_n`. Each level extends the previous one by a
/// vertex with every possible neighbourhood.
pub fn hereditary_up_to_iso(max_n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    assert!(max_n <= 8, "canonical enumeration is limited to 8 vertices");
    let mut levels = vec![vec![Graph::empty(0)]];
    for n in 1..=max_n {
        let mut seen = BTreeSet::new();
        let mut level = Vec::new();
        for g in &levels[n - 1] {
            for mask in 0u32..1 << (n - 1) {
                let nb: Vec<usize> = (0..n - 1).filter(|&u| mask >> u & 1 == 1).collect();
                let h = g.with_vertex(&nb).expect("valid neighbourhood");
                if seen.insert(canonical_code(&h)) && keep(&h) {
                    level.push(h);
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Graphs in the class up to isomorphism, indexed by order `0..=max_n`.
pub fn in_class_up_to_iso(max_n: usize) -> Vec<Vec<Graph>> {
    hereditary_up_to_iso(max_n, |g| is_in_class(g).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_codes_identify_isomorphic_graphs() {
        let a = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&Graph::cycle(4)));
        assert_eq!(from_code(4, canonical_code(&a)).edge_count(), 3);
        // two 2-regular graphs on six vertices
        let two_triangles = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_ne!(canonical_code(&Graph::cycle(6)), canonical_code(&two_triangles));
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let g = crate::patterns::Pattern::F3.graph();
        let n = g.order();
        let code = canonical_code(&g);
        let mut perm: Vec<usize> = (0..n).collect();
        for_each_permutation(&mut perm, &mut |p| {
            let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (p[u], p[v])).collect();
            assert_eq!(canonical_code(&Graph::new(n, &edges).unwrap()), code);
        });
    }

    #[test]
    fn small_counts() {
        assert_eq!(labeled_graphs(4).count(), 64);
        // every graph on at most 4 vertices is in the class: 1, 1, 2, 4, 11
        let levels = in_class_up_to_iso(5);
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(&counts[..5], &[1, 1, 2, 4, 11]);
        // 34 graphs on five vertices, minus the bull
        assert_eq!(counts[5], 33);

        // unlabelled graphs on 0..=6 vertices
        let all: Vec<usize> = hereditary_up_to_iso(6, |_| true).iter().map(Vec::len).collect();
        assert_eq!(all, [1, 1, 2, 4, 11, 34, 156]);
    }
}
