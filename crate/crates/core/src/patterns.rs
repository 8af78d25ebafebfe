//! Fixed small graphs and exhaustive induced-subgraph search.
//!
//! Pattern vertex `i` corresponds to the labelled vertex `v_{i+1}` of the
//! usual drawings (or to `a, b, c, ...` for the bull), so an embedding
//! `e` maps `v_{i+1}` to host vertex `e[i]`.

use std::fmt;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Catalogue of named small graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, PartialOrd, Ord)]
pub enum Pattern {
    P6,
    C5,
    K3,
    K5,
    Bull,
    Gem,
    Broom,
    DoubleWheel,
    F0,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
}

impl Pattern {
    pub const ALL: [Pattern; 15] = [
        Pattern::P6,
        Pattern::C5,
        Pattern::K3,
        Pattern::K5,
        Pattern::Bull,
        Pattern::Gem,
        Pattern::Broom,
        Pattern::DoubleWheel,
        Pattern::F0,
        Pattern::F1,
        Pattern::F2,
        Pattern::F3,
        Pattern::F4,
        Pattern::F5,
        Pattern::F6,
    ];

    /// The magnet family, in the order the solver looks for them.
    pub const MAGNETS: [Pattern; 7] = [
        Pattern::F0,
        Pattern::F1,
        Pattern::F2,
        Pattern::F3,
        Pattern::F4,
        Pattern::F5,
        Pattern::F6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::P6 => "P6",
            Pattern::C5 => "C5",
            Pattern::K3 => "K3",
            Pattern::K5 => "K5",
            Pattern::Bull => "bull",
            Pattern::Gem => "gem",
            Pattern::Broom => "broom",
            Pattern::DoubleWheel => "double-wheel",
            Pattern::F0 => "F0",
            Pattern::F1 => "F1",
            Pattern::F2 => "F2",
            Pattern::F3 => "F3",
            Pattern::F4 => "F4",
            Pattern::F5 => "F5",
            Pattern::F6 => "F6",
        }
    }

    pub fn order(self) -> usize {
        match self {
            Pattern::K3 => 3,
            Pattern::C5 | Pattern::K5 | Pattern::Bull | Pattern::Gem => 5,
            Pattern::P6 | Pattern::Broom => 6,
            Pattern::F1 | Pattern::F2 | Pattern::F3 | Pattern::F4 | Pattern::F5 => 6,
            Pattern::DoubleWheel | Pattern::F0 | Pattern::F6 => 7,
        }
    }

    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            Pattern::P6 => Graph::path(6).edges(),
            Pattern::C5 => Graph::cycle(5).edges(),
            Pattern::K3 => Graph::complete(3).edges(),
            Pattern::K5 => Graph::complete(5).edges(),
            // a b c d e
            Pattern::Bull => vec![(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)],
            Pattern::Gem => vec![(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
            Pattern::Broom => vec![(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3), (4, 5)],
            Pattern::DoubleWheel => {
                let mut e = rim();
                e.push((5, 6));
                e.extend((0..5).flat_map(|i| [(5, i), (6, i)]));
                e
            }
            Pattern::F0 => {
                let mut e = rim();
                e.extend((0..5).map(|i| (5, i)));
                e.extend((0..4).map(|i| (6, i)));
                e
            }
            Pattern::F1 => {
                let mut e = vec![(0, 1), (1, 2), (2, 3), (3, 4)];
                e.extend((0..5).map(|i| (5, i)));
                e
            }
            Pattern::F2 => {
                let mut e = Pattern::F1.edges();
                e.push((0, 4));
                e
            }
            Pattern::F3 => vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)],
            Pattern::F4 => {
                let mut e = Pattern::F3.edges();
                e.push((0, 5));
                e
            }
            Pattern::F5 => Graph::cycle(6).complement().edges(),
            Pattern::F6 => {
                let mut e = rim();
                e.extend([(5, 0), (5, 1), (5, 2), (5, 4)]);
                e.extend([(6, 1), (6, 2), (6, 3), (6, 4), (6, 5)]);
                e
            }
        }
    }

    pub fn graph(self) -> Graph {
        Graph::new(self.order(), &self.edges()).expect("catalogue edge lists are valid")
    }
}

fn rim() -> Vec<(usize, usize)> {
    vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn image(&self, host: &Graph) -> VertexSet {
        host.set(self.0.iter().copied())
    }

    /// Whether the image induces exactly `pattern` under this map.
    pub fn is_induced(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.0;
        if m.len() != pattern.order() || m.iter().any(|&v| v >= host.order()) {
            return false;
        }
        let distinct = host.set(m.iter().copied()).len() == m.len();
        distinct
            && (0..m.len()).all(|i| {
                (i + 1..m.len()).all(|j| pattern.adjacent(i, j) == host.adjacent(m[i], m[j]))
            })
    }
}

/// Lexicographically least induced embedding of `pattern` into `host`,
/// comparing tuples indexed by pattern vertex.
pub fn find_induced_graph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.order();
    if k > host.order() {
        return None;
    }
    if k == 0 {
        return Some(Embedding(Vec::new()));
    }
    let all = host.vertices();
    let mut image = Vec::with_capacity(k);
    let mut used = host.empty_set();
    extend(host, pattern, &all, &mut image, &mut used).then_some(Embedding(image))
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    all: &VertexSet,
    image: &mut Vec<usize>,
    used: &mut VertexSet,
) -> bool {
    let i = image.len();
    if i == pattern.order() {
        return true;
    }
    let mut candidates = all.difference(used);
    for (j, &h) in image.iter().enumerate() {
        if pattern.adjacent(i, j) {
            candidates.intersect_with(host.neighbors(h));
        } else {
            candidates.difference_with(host.neighbors(h));
        }
        if candidates.is_empty() {
            return false;
        }
    }
    let need = pattern.degree(i);
    for v in candidates.iter() {
        if host.degree(v) < need {
            continue;
        }
        image.push(v);
        used.insert(v);
        if extend(host, pattern, all, image, used) {
            return true;
        }
        used.remove(v);
        image.pop();
    }
    false
}

pub fn find_induced(host: &Graph, pattern: Pattern) -> Option<Embedding> {
    find_induced_graph(host, &pattern.graph())
}

pub fn contains(host: &Graph, pattern: Pattern) -> bool {
    find_induced(host, pattern).is_some()
}

/// A forbidden pattern found in a graph outside the class.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub pattern: Pattern,
    pub embedding: Embedding,
}

/// `None` when `g` is (P6, bull)-free; otherwise an induced P6 or bull.
pub fn is_in_class(g: &Graph) -> Option<Witness> {
    [Pattern::P6, Pattern::Bull]
        .into_iter()
        .find_map(|p| find_induced(g, p).map(|embedding| Witness { pattern: p, embedding }))
}

/// Connected, and all edges fall in one class of the closure of "share an
/// end and together induce a P3".
pub fn is_p3_connected(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    let edges = g.edges();
    if edges.len() <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            let ends = match (a == c, a == d, b == c, b == d) {
                (true, _, _, _) => Some((b, d)),
                (_, true, _, _) => Some((b, c)),
                (_, _, true, _) => Some((a, d)),
                (_, _, _, true) => Some((a, c)),
                _ => None,
            };
            if let Some((x, y)) = ends {
                if !g.adjacent(x, y) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
    }
    let root = find(&mut parent, 0);
    (1..edges.len()).all(|i| find(&mut parent, i) == root)
}

/// Every vertex outside `f` has two adjacent neighbours inside `f`.
pub fn is_magnet(g: &Graph, f: &VertexSet) -> bool {
    magnet_failure(g, f).is_none()
}

/// First vertex outside `f` without two adjacent neighbours in `f`.
pub fn magnet_failure(g: &Graph, f: &VertexSet) -> Option<usize> {
    let outside = g.vertices().difference(f);
    let failure = outside.iter().find(|&x| {
        let inside = g.neighbors_in(x, f);
        let has_edge = inside.iter().any(|u| g.neighbors(u).intersects(&inside));
        !has_edge
    });
    failure
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_shapes() {
        let expected_edges = [
            (Pattern::P6, 5),
            (Pattern::C5, 5),
            (Pattern::K3, 3),
            (Pattern::K5, 10),
            (Pattern::Bull, 5),
            (Pattern::Gem, 7),
            (Pattern::Broom, 8),
            (Pattern::DoubleWheel, 16),
            (Pattern::F0, 14),
            (Pattern::F1, 9),
            (Pattern::F2, 10),
            (Pattern::F3, 9),
            (Pattern::F4, 10),
            (Pattern::F5, 9),
            (Pattern::F6, 14),
        ];
        for (p, m) in expected_edges {
            assert_eq!(p.graph().edge_count(), m, "{p}");
        }
    }

    #[test]
    fn identity_embedding_for_every_pattern() {
        for p in Pattern::ALL {
            let e = find_induced(&p.graph(), p).unwrap();
            assert_eq!(e.0, (0..p.order()).collect::<Vec<_>>(), "{p}");
        }
    }

    #[test]
    fn find_induced_examples() {
        assert!(find_induced(&Graph::cycle(5), Pattern::Bull).is_none());
        let f2 = Pattern::F2.graph();
        let gem = find_induced(&f2, Pattern::Gem).unwrap();
        assert!(gem.is_induced(&f2, &Pattern::Gem.graph()));
        // only the hub of F2 can play the gem's dominating vertex
        assert_eq!(gem.0[4], 5);
    }

    #[test]
    fn class_membership() {
        assert!(is_in_class(&Graph::cycle(5)).is_none());
        assert_eq!(is_in_class(&Graph::path(6)).unwrap().pattern, Pattern::P6);
        assert_eq!(is_in_class(&Pattern::Bull.graph()).unwrap().pattern, Pattern::Bull);
    }

    #[test]
    fn p3_connectivity() {
        for p in [Pattern::F0, Pattern::F3, Pattern::F4, Pattern::F5, Pattern::F6] {
            assert!(is_p3_connected(&p.graph()), "{p}");
        }
        for p in [Pattern::F1, Pattern::F2] {
            assert!(!is_p3_connected(&p.graph()), "{p}");
        }
        assert!(!is_p3_connected(&Graph::complete(3)));
        assert!(is_p3_connected(&Graph::complete(2)));
        assert!(!is_p3_connected(&Graph::empty(2)));
    }

    #[test]
    fn magnets() {
        let k5 = Graph::complete(5);
        assert!(is_magnet(&k5, &k5.set([0, 1, 2])));
        let edge = Graph::path(2);
        assert!(!is_magnet(&edge, &edge.set([0])));
        let f2 = Pattern::F2.graph();
        let hub: Vec<usize> = (0..6).collect();
        let g = f2.with_vertex(&hub).unwrap();
        assert!(is_magnet(&g, &g.set(0..6)));
    }
}
