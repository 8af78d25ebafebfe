//! Dense simple undirected graphs over vertices `0..n`.
//!
//! Adjacency rows are fixed-width bit vectors, so neighbourhood and
//! completeness tests reduce to word operations. Graphs are immutable once
//! built; deleting vertices goes through [`Graph::induced`], which returns the
//! map back to the parent's vertex indices.

use std::fmt;

use crate::error::{contract, Error, Result};

const WORD: usize = 64;

fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

/// A subset of `0..universe` stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { universe, words: vec![0; words_for(universe)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = VertexSet::new(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = VertexSet::new(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        VertexSet::from_vertices(universe, [v])
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same(&self, other: &VertexSet) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// `0..universe` minus this set.
    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_same(other);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![VertexSet::new(n); n] }
    }

    pub fn complete(n: usize) -> Graph {
        Graph {
            adj: (0..n)
                .map(|v| {
                    let mut row = VertexSet::full(n);
                    row.remove(v);
                    row
                })
                .collect(),
        }
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// Builds a graph from adjacency rows; rows must be symmetric and loop-free.
    pub fn from_rows(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        for (u, row) in adj.iter().enumerate() {
            if row.universe() != n {
                return contract("adjacency row over the wrong universe");
            }
            if row.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            if let Some(v) = row.iter().find(|&v| !adj[v].contains(u)) {
                return contract(format!("adjacency not symmetric at ({u}, {v})"));
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.order())
    }

    pub fn set(&self, vertices: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_vertices(self.order(), vertices)
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.order() {
            return contract(format!(
                "vertex set over {} vertices used with a graph on {}",
                s.universe(),
                self.order()
            ));
        }
        Ok(())
    }

    /// `N_S(v)`.
    pub fn neighbors_in(&self, v: usize, s: &VertexSet) -> VertexSet {
        self.adj[v].intersection(s)
    }

    pub fn is_complete_to(&self, v: usize, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        if s.contains(v) {
            return contract(format!("vertex {v} belongs to the set it is compared against"));
        }
        Ok(s.is_subset(&self.adj[v]))
    }

    pub fn is_anticomplete_to(&self, v: usize, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        if s.contains(v) {
            return contract(format!("vertex {v} belongs to the set it is compared against"));
        }
        Ok(s.is_disjoint(&self.adj[v]))
    }

    /// Every vertex of `a` is adjacent to every vertex of `b`.
    pub fn sets_complete(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|u| b.is_subset(&self.adj[u]))
    }

    /// No edge between `a` and `b`.
    pub fn sets_anticomplete(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|u| b.is_disjoint(&self.adj[u]))
    }

    /// `N(S)`: vertices outside `s` with a neighbour in `s`.
    pub fn neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    /// Connected components of `G[s]`, each listed once, ordered by least vertex.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = s.clone();
        let mut out = Vec::new();
        while let Some(root) = remaining.first() {
            let mut comp = self.set([root]);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = self.empty_set();
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(&remaining);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn complement(&self) -> Graph {
        Graph {
            adj: (0..self.order())
                .map(|v| {
                    let mut row = self.adj[v].complement();
                    row.remove(v);
                    row
                })
                .collect(),
        }
    }

    /// `G[s]` with its vertices renumbered in increasing order; the returned
    /// vector maps each new index to the parent vertex.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let k = map.len();
        let adj = map
            .iter()
            .map(|&u| {
                VertexSet::from_vertices(
                    k,
                    map.iter().enumerate().filter(|&(_, &v)| self.adjacent(u, v)).map(|(i, _)| i),
                )
            })
            .collect();
        (Graph { adj }, map)
    }

    /// `G[V \ s]` with its parent map.
    pub fn without(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced(&self.vertices().difference(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(VertexSet::is_empty)
    }

    /// Two-colours `G[s]`: each component's least vertex goes to the first
    /// side. For a connected `G[s]` the split is the unique bipartition.
    /// `None` when `G[s]` has an odd cycle.
    pub fn bipartition(&self, s: &VertexSet) -> Option<(VertexSet, VertexSet)> {
        let mut side = vec![None::<bool>; self.order()];
        let mut a = self.empty_set();
        let mut b = self.empty_set();
        for comp in self.components_within(s) {
            let root = comp.first().expect("components are non-empty");
            side[root] = Some(false);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let su = side[u].expect("stacked vertices are sided");
                if su { b.insert(u) } else { a.insert(u) };
                for v in self.adj[u].intersection(&comp).iter() {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some((a, b))
    }

    /// The split of a connected bipartite `G[s]`, or `None` if it has an odd cycle.
    pub fn is_bipartite_component(&self, s: &VertexSet) -> Result<Option<(VertexSet, VertexSet)>> {
        self.check_set(s)?;
        if self.components_within(s).len() > 1 {
            return contract("bipartition requested for a disconnected vertex set");
        }
        Ok(self.bipartition(s))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition(&self.vertices()).is_some()
    }

    /// Disjoint union in order: `self` keeps its indices, `other` is shifted.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(shift + other.order(), &edges).expect("shifted edges are valid")
    }

    /// Adds one vertex adjacent to exactly `neighbors`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut edges = self.edges();
        edges.extend(neighbors.iter().map(|&u| (u, n)));
        Graph::new(n + 1, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// A total colouring `vertex -> 1..=palette`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    colors: Vec<u8>,
    palette: u8,
}

impl Coloring {
    pub fn new(colors: Vec<u8>, palette: u8) -> Result<Coloring> {
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > palette) {
            return contract(format!("vertex {v} has colour {c} outside 1..={palette}"));
        }
        Ok(Coloring { colors, palette })
    }

    pub fn empty() -> Coloring {
        Coloring { colors: Vec::new(), palette: 0 }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    #[inline]
    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.colors
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.colors
    }

    /// Number of distinct colours actually used.
    pub fn used(&self) -> usize {
        let mut seen = 0u64;
        for &c in &self.colors {
            seen |= 1 << c;
        }
        seen.count_ones() as usize
    }

    pub fn with_palette(mut self, palette: u8) -> Result<Coloring> {
        if self.colors.iter().any(|&c| c > palette) {
            return contract(format!("colouring does not fit a palette of {palette}"));
        }
        self.palette = palette;
        Ok(self)
    }
}

/// Whether `c` is a proper colouring of `g`. A colouring whose length is not
/// the vertex count is a contract error.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.len() != g.order() {
        return contract(format!(
            "colouring covers {} vertices, graph has {}",
            c.len(),
            g.order()
        ));
    }
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::cycle(5)
    }

    #[test]
    fn build_dedups_and_rejects_bad_edges() {
        let g = Graph::new(5, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(0, &[]).unwrap().order(), 0);
        assert_eq!(c5().edge_count(), 5);
    }

    #[test]
    fn completeness_tests() {
        let bull = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]).unwrap();
        assert!(bull.is_complete_to(1, &bull.set([0, 2, 4])).unwrap());
        let g = c5();
        assert!(g.is_complete_to(0, &g.empty_set()).unwrap());
        assert!(g.is_anticomplete_to(0, &g.empty_set()).unwrap());
        assert!(g.is_anticomplete_to(0, &g.set([2, 3])).unwrap());
        assert!(g.is_complete_to(0, &g.set([0, 1])).is_err());
    }

    #[test]
    fn components_and_complement() {
        assert_eq!(c5().components().len(), 1);
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let comps = two.components();
        assert_eq!(comps.iter().map(VertexSet::len).collect::<Vec<_>>(), vec![2, 2]);
        assert!(Graph::empty(0).components().is_empty());
        let cc = c5().complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2));
        assert!(cc.is_connected());
    }

    #[test]
    fn cliques_stables_bipartitions() {
        let k5 = Graph::complete(5);
        assert!(k5.is_clique(&k5.vertices()));
        assert!(!k5.is_stable(&k5.set([0, 1])));
        let g = c5();
        assert!(g.is_bipartite_component(&g.vertices()).unwrap().is_none());
        let p4 = Graph::path(4);
        let (a, b) = p4.is_bipartite_component(&p4.vertices()).unwrap().unwrap();
        assert_eq!(a.to_vec(), vec![0, 2]);
        assert_eq!(b.to_vec(), vec![1, 3]);
        assert!(p4.is_bipartite_component(&p4.set([0, 3])).is_err());
    }

    #[test]
    fn induced_keeps_exactly_inner_edges() {
        let g = c5();
        let (h, map) = g.induced(&g.set([0, 1, 2, 4]));
        assert_eq!(map, vec![0, 1, 2, 4]);
        assert_eq!(h.edges(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn verify_coloring_examples() {
        let g = c5();
        assert!(verify_coloring(&g, &Coloring::new(vec![1, 2, 1, 2, 3], 3).unwrap()).unwrap());
        let e = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(!verify_coloring(&e, &Coloring::new(vec![1, 1], 1).unwrap()).unwrap());
        let k5 = Graph::complete(5);
        assert!(verify_coloring(&k5, &Coloring::new(vec![1, 2, 3, 4, 5], 5).unwrap()).unwrap());
        assert!(verify_coloring(&k5, &Coloring::new(vec![1, 2], 2).unwrap()).is_err());
        assert!(Coloring::new(vec![0], 4).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (0..=max_n).prop_flat_map(|n| {
                let pairs = n * n.saturating_sub(1) / 2;
                proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                edges.push((u, v));
                            }
                            k += 1;
                        }
                    }
                    Graph::new(n, &edges).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn double_complement_is_identity(g in arb_graph(12)) {
                prop_assert_eq!(g.complement().complement(), g);
            }

            #[test]
            fn components_partition_vertices(g in arb_graph(12)) {
                let comps = g.components();
                let mut seen = g.empty_set();
                for c in &comps {
                    prop_assert!(c.is_disjoint(&seen));
                    seen.union_with(c);
                    prop_assert_eq!(g.components_within(c).len(), 1);
                    prop_assert!(g.sets_anticomplete(c, &g.vertices().difference(c)));
                }
                prop_assert_eq!(seen, g.vertices());
            }

            #[test]
            fn induced_edges_match_parent(g in arb_graph(10), mask in any::<u16>()) {
                let s = g.set((0..g.order()).filter(|v| mask & (1 << v) != 0));
                let (h, map) = g.induced(&s);
                for i in 0..h.order() {
                    for j in 0..h.order() {
                        if i != j {
                            prop_assert_eq!(h.adjacent(i, j), g.adjacent(map[i], map[j]));
                        }
                    }
                }
            }
        }
    }
}
