//! Homogeneous sets, maximal modules, and the reduction to quasi-prime graphs.
//!
//! Everything here is computed by splitter closure: the smallest homogeneous
//! set containing two vertices is grown by repeatedly absorbing a vertex that
//! sees some but not all of the current set.

use crate::error::{contract, Result};
use crate::graph::{verify_coloring, Coloring, Graph, VertexSet};
use crate::listcolor::{small_chromatic_coloring, ColoringOracle, ExactOracle};
use crate::patterns::is_in_class;

/// Every vertex outside `s` is complete or anticomplete to `s`.
pub fn is_homogeneous(g: &Graph, s: &VertexSet) -> bool {
    splitter(g, s).is_none()
}

fn splitter(g: &Graph, s: &VertexSet) -> Option<usize> {
    let size = s.len();
    g.vertices().difference(s).iter().find(|&x| {
        let seen = g.neighbors(x).intersection_len(s);
        seen != 0 && seen != size
    })
}

/// The smallest homogeneous set containing `seed`.
pub fn homogeneous_closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut s = seed.clone();
    while let Some(x) = splitter(g, &s) {
        s.insert(x);
    }
    s
}

fn pair_closure(g: &Graph, u: usize, v: usize) -> VertexSet {
    homogeneous_closure(g, &g.set([u, v]))
}

/// The maximal modules of a graph whose complement is also connected.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModulePartition {
    /// Ordered by least vertex.
    pub parts: Vec<VertexSet>,
}

impl ModulePartition {
    pub fn part_of(&self, v: usize) -> usize {
        self.parts.iter().position(|p| p.contains(v)).expect("parts cover every vertex")
    }
}

/// With `g` and its complement connected, every proper homogeneous set lies
/// inside one maximal module, so two vertices share a module exactly when
/// their closure is not the whole vertex set.
pub fn maximal_modules(g: &Graph) -> Result<ModulePartition> {
    let n = g.order();
    if n < 2 {
        return contract("maximal modules need at least two vertices");
    }
    if !g.is_connected() || !g.complement().is_connected() {
        return contract("maximal modules need the graph and its complement connected");
    }
    let mut assigned = g.empty_set();
    let mut parts = Vec::new();
    for u in 0..n {
        if assigned.contains(u) {
            continue;
        }
        let mut part = g.set([u]);
        for v in u + 1..n {
            if !assigned.contains(v) && pair_closure(g, u, v).len() != n {
                part.insert(v);
            }
        }
        assigned.union_with(&part);
        parts.push(part);
    }
    Ok(ModulePartition { parts })
}

/// Number of modules: nonempty homogeneous sets that are nested with or
/// disjoint from every homogeneous set. Exhaustive over all subsets.
pub fn count_modules(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > 12 {
        return contract("count_modules enumerates subsets and accepts at most 12 vertices");
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let homogeneous: Vec<u32> = (1u32..1 << n)
        .filter(|&s| {
            (0..n).filter(|&x| s & 1 << x == 0).all(|x| {
                let seen = adj[x] & s;
                seen == 0 || seen == s
            })
        })
        .collect();
    let count = homogeneous
        .iter()
        .filter(|&&s| {
            homogeneous
                .iter()
                .all(|&t| s & t == 0 || s & t == s || s & t == t)
        })
        .count();
    Ok(count)
}

/// Every proper homogeneous set is a clique. A non-clique proper homogeneous
/// set contains a non-adjacent pair whose closure it contains, so checking
/// the closures of non-adjacent pairs is exact.
pub fn is_quasi_prime(g: &Graph) -> bool {
    quasi_prime_obstruction(g).is_none()
}

/// A proper homogeneous set that is not a clique, if any.
pub fn quasi_prime_obstruction(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) {
                let s = pair_closure(g, u, v);
                if s.len() != n {
                    return Some(s);
                }
            }
        }
    }
    None
}

/// No proper homogeneous set at all.
pub fn is_prime(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|u| (u + 1..n).all(|v| pair_closure(g, u, v).len() == n))
}

/// Where a vertex of the reduced graph comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Origin {
    /// A vertex of the parent graph, kept as is.
    Kept(usize),
    /// Vertex `slot` of the clique replacing record `record`'s module.
    Clique { record: usize, slot: usize },
}

/// One non-clique maximal module replaced by a clique.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionRecord {
    /// Vertices in the parent graph.
    pub module: VertexSet,
    /// Chromatic number of the module, in `1..=3`.
    pub chromatic: u8,
    /// Vertices of the replacing clique in the reduced graph.
    pub clique: Vec<usize>,
    /// Colour classes of an optimal colouring of the module, ordered by
    /// least vertex.
    pub classes: Vec<VertexSet>,
}

/// A graph obtained by replacing each non-clique maximal module by a clique
/// of its chromatic number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reduction {
    pub graph: Graph,
    pub origin: Vec<Origin>,
    pub records: Vec<ReductionRecord>,
    pub parent_order: usize,
}

impl Reduction {
    /// The identity reduction.
    pub fn identity(g: &Graph) -> Reduction {
        Reduction {
            graph: g.clone(),
            origin: (0..g.order()).map(Origin::Kept).collect(),
            records: Vec::new(),
            parent_order: g.order(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReduceOutcome {
    /// This module needs four or more colours while its neighbourhood is
    /// nonempty and complete to it.
    NotFourColorable { module: VertexSet },
    Reduced(Reduction),
}

/// Replaces every non-clique maximal module by a clique, using the exact
/// oracle for module chromatic numbers.
pub fn quasi_prime_reduce(g: &Graph) -> Result<ReduceOutcome> {
    if let Some(w) = is_in_class(g) {
        return contract(format!("graph contains an induced {}", w.pattern.name()));
    }
    reduce_with(g, &ExactOracle)
}

/// As [`quasi_prime_reduce`] without the class check, which callers that
/// already hold a class certificate skip.
pub fn reduce_with(g: &Graph, oracle: &dyn ColoringOracle) -> Result<ReduceOutcome> {
    let modules = maximal_modules(g)?;
    let n = g.order();
    let mut origin = Vec::new();
    let mut records: Vec<ReductionRecord> = Vec::new();
    // parent vertex whose outside adjacencies each reduced vertex copies
    let mut representative = Vec::new();
    let mut part_record = vec![None; modules.parts.len()];

    for (i, part) in modules.parts.iter().enumerate() {
        if g.is_clique(part) {
            continue;
        }
        let (sub, map) = g.induced(part);
        let Some(c) = small_chromatic_coloring(&sub, oracle).filter(|c| c.palette() <= 3) else {
            return Ok(ReduceOutcome::NotFourColorable { module: part.clone() });
        };
        let classes = classes_by_least_vertex(&c, &map, n);
        part_record[i] = Some(records.len());
        records.push(ReductionRecord {
            module: part.clone(),
            chromatic: c.palette(),
            clique: Vec::new(),
            classes,
        });
    }

    for v in 0..n {
        let part = modules.part_of(v);
        match part_record[part] {
            None => {
                origin.push(Origin::Kept(v));
                representative.push(v);
            }
            Some(r) if modules.parts[part].first() == Some(v) => {
                for slot in 0..records[r].chromatic as usize {
                    records[r].clique.push(origin.len());
                    origin.push(Origin::Clique { record: r, slot });
                    representative.push(v);
                }
            }
            Some(_) => {}
        }
    }

    let m = origin.len();
    let mut edges = Vec::new();
    for x in 0..m {
        for y in x + 1..m {
            let same_clique = matches!(
                (origin[x], origin[y]),
                (Origin::Clique { record: a, .. }, Origin::Clique { record: b, .. }) if a == b
            );
            if same_clique || g.adjacent(representative[x], representative[y]) {
                edges.push((x, y));
            }
        }
    }
    let graph = Graph::new(m, &edges)?;
    Ok(ReduceOutcome::Reduced(Reduction { graph, origin, records, parent_order: n }))
}

fn classes_by_least_vertex(c: &Coloring, map: &[usize], universe: usize) -> Vec<VertexSet> {
    let mut order: Vec<u8> = Vec::new();
    let mut classes: Vec<VertexSet> = Vec::new();
    for (i, &v) in map.iter().enumerate() {
        let color = c.color(i);
        let k = match order.iter().position(|&o| o == color) {
            Some(k) => k,
            None => {
                order.push(color);
                classes.push(VertexSet::new(universe));
                order.len() - 1
            }
        };
        classes[k].insert(v);
    }
    classes
}

/// Pulls a proper colouring of the reduced graph back to the parent graph:
/// class `i` of a replaced module takes the colour of the clique's `i`-th
/// vertex.
pub fn lift_coloring(c: &Coloring, reduction: &Reduction) -> Result<Coloring> {
    if !verify_coloring(&reduction.graph, c)? {
        return contract("colouring of the reduced graph is not proper");
    }
    let mut colors = vec![0u8; reduction.parent_order];
    for (x, o) in reduction.origin.iter().enumerate() {
        if let Origin::Kept(v) = *o {
            colors[v] = c.color(x);
        }
    }
    for record in &reduction.records {
        for (class, &x) in record.classes.iter().zip(&record.clique) {
            for v in class.iter() {
                colors[v] = c.color(x);
            }
        }
    }
    Coloring::new(colors, c.palette())
}
