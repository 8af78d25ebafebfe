//! List-colouring engines.
//!
//! * [`two_list_color`] solves list colouring when every list has at most two
//!   colours, through 2-satisfiability.
//! * [`exact_list_color`] and [`exact_k_color`] are exponential backtracking
//!   searches. They are the exact oracles the rest of the crate uses wherever
//!   a polynomial 3-colouring or perfect-graph colouring routine would go;
//!   [`ColoringOracle`] is the seam for swapping one in.
//! * [`magnet_color`] precolours a magnet and finishes with 2-list colouring.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{contract, Result};
use crate::graph::{Coloring, Graph, VertexSet};
use crate::patterns::magnet_failure;

/// A set of colours drawn from `1..=8`; bit `c - 1` stands for colour `c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn new(colors: impl IntoIterator<Item = u8>) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        for c in colors {
            s.insert(c);
        }
        s
    }

    /// `{1, ..., k}`.
    pub fn upto(k: u8) -> ColorSet {
        assert!(k <= 8, "colour sets hold at most eight colours");
        ColorSet(((1u16 << k) - 1) as u8)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn insert(&mut self, c: u8) {
        assert!((1..=8).contains(&c), "colour {c} outside 1..=8");
        self.0 |= 1 << (c - 1);
    }

    pub fn remove(&mut self, c: u8) {
        if (1..=8).contains(&c) {
            self.0 &= !(1 << (c - 1));
        }
    }

    pub fn contains(self, c: u8) -> bool {
        (1..=8).contains(&c) && self.0 & (1 << (c - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Colours in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        (1..=8u8).filter(move |&c| self.contains(c))
    }

    pub fn min(self) -> Option<u8> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as u8 + 1)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn without(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Allowed colours per vertex; index `v` holds `L(v)`.
pub type ListAssignment = Vec<ColorSet>;

fn check_lists(g: &Graph, lists: &[ColorSet]) -> Result<()> {
    if lists.len() != g.order() {
        return contract(format!(
            "{} lists given for a graph on {} vertices",
            lists.len(),
            g.order()
        ));
    }
    Ok(())
}

fn palette_of(lists: &[ColorSet]) -> u8 {
    lists.iter().filter_map(|l| l.iter().last()).max().unwrap_or(0).max(4)
}

/// List colouring with lists of size at most two.
///
/// One Boolean per vertex picks the first or second colour of its list
/// (a singleton list forces its literal); each edge contributes one clause per
/// shared colour. The formula is decided by strongly connected components of
/// its implication graph.
pub fn two_list_color(g: &Graph, lists: &[ColorSet]) -> Result<Option<Coloring>> {
    check_lists(g, lists)?;
    if let Some(v) = lists.iter().position(|l| l.len() > 2) {
        return contract(format!("vertex {v} has a list of {} colours", lists[v].len()));
    }
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(None);
    }
    let n = g.order();
    // literal 2v: v takes the first colour of its list; 2v + 1: the second
    let lit = |v: usize, c: u8| -> Option<usize> {
        let l = lists[v];
        if !l.contains(c) {
            None
        } else if l.min() == Some(c) {
            Some(2 * v)
        } else {
            Some(2 * v + 1)
        }
    };
    let mut implications: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for v in 0..n {
        if lists[v].len() == 1 {
            implications[2 * v + 1].push(2 * v);
        }
    }
    for (u, v) in g.edges() {
        for c in lists[u].intersection(lists[v]).iter() {
            let (a, b) = (lit(u, c).unwrap(), lit(v, c).unwrap());
            // not (a and b)
            implications[a].push(b ^ 1);
            implications[b].push(a ^ 1);
        }
    }
    let comp = strongly_connected_components(&implications);
    let mut colors = Vec::with_capacity(n);
    for v in 0..n {
        let (pos, neg) = (comp[2 * v], comp[2 * v + 1]);
        if pos == neg {
            return Ok(None);
        }
        // components come out in reverse topological order
        let mut it = lists[v].iter();
        let first = it.next().unwrap();
        colors.push(if pos < neg { first } else { it.next().unwrap_or(first) });
    }
    let coloring = Coloring::new(colors, palette_of(lists))?;
    debug_assert!(respects(g, lists, &coloring));
    Ok(Some(coloring))
}

/// Tarjan's algorithm without recursion. Component ids are assigned in the
/// order components are completed, i.e. reverse topological order.
fn strongly_connected_components(succ: &[Vec<usize>]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = succ.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if let Some(&w) = succ[v].get(*edge) {
                *edge += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

pub(crate) fn respects(g: &Graph, lists: &[ColorSet], c: &Coloring) -> bool {
    c.len() == g.order()
        && (0..g.order()).all(|v| lists[v].contains(c.color(v)))
        && g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v))
}

/// Backtracking search shared by the exact oracles. Colours are bits of a
/// `u64`, so palettes are limited to 64 colours.
struct Search<'g> {
    g: &'g Graph,
    allowed: Vec<u64>,
    blocked: Vec<Vec<u16>>,
    color: Vec<u8>,
    palette: u8,
    symmetric: bool,
    max_used: u8,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, allowed: Vec<u64>, palette: u8, symmetric: bool) -> Self {
        Search {
            g,
            allowed,
            blocked: vec![vec![0; palette as usize]; g.order()],
            color: vec![0; g.order()],
            palette,
            symmetric,
            max_used: 0,
        }
    }

    fn available(&self, v: usize) -> u64 {
        let mut mask = self.allowed[v];
        for (i, &count) in self.blocked[v].iter().enumerate() {
            if count > 0 {
                mask &= !(1 << i);
            }
        }
        if self.symmetric {
            let cap = (self.max_used + 1).min(self.palette);
            mask &= if cap >= 64 { u64::MAX } else { (1u64 << cap) - 1 };
        }
        mask
    }

    fn pick(&self) -> Option<(usize, u64)> {
        let mut best: Option<(usize, u64, u32, usize)> = None;
        for v in 0..self.g.order() {
            if self.color[v] != 0 {
                continue;
            }
            let avail = self.available(v);
            let options = avail.count_ones();
            let free_degree =
                self.g.neighbors(v).iter().filter(|&u| self.color[u] == 0).count();
            let better = match best {
                None => true,
                Some((_, _, o, d)) => options < o || (options == o && free_degree > d),
            };
            if better {
                best = Some((v, avail, options, free_degree));
                if options == 0 {
                    break;
                }
            }
        }
        best.map(|(v, avail, _, _)| (v, avail))
    }

    fn assign(&mut self, v: usize, c: u8) {
        self.color[v] = c;
        for u in self.g.neighbors(v).iter() {
            self.blocked[u][(c - 1) as usize] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        for u in self.g.neighbors(v).iter() {
            self.blocked[u][(c - 1) as usize] -= 1;
        }
    }

    fn run(&mut self) -> bool {
        let Some((v, avail)) = self.pick() else {
            return true;
        };
        let saved = self.max_used;
        let mut mask = avail;
        while mask != 0 {
            let c = mask.trailing_zeros() as u8 + 1;
            mask &= mask - 1;
            self.assign(v, c);
            self.max_used = saved.max(c);
            if self.run() {
                return true;
            }
            self.unassign(v);
            self.max_used = saved;
        }
        false
    }
}

/// Exact list colouring for lists of any size.
pub fn exact_list_color(g: &Graph, lists: &[ColorSet]) -> Result<Option<Coloring>> {
    check_lists(g, lists)?;
    let palette = palette_of(lists);
    let allowed = lists.iter().map(|l| l.bits() as u64).collect();
    let mut search = Search::new(g, allowed, palette, false);
    if !search.run() {
        return Ok(None);
    }
    let c = Coloring::new(search.color, palette)?;
    debug_assert!(respects(g, lists, &c));
    Ok(Some(c))
}

/// Exact `k`-colouring. New colours enter in increasing order, which fixes
/// the first coloured vertex to colour 1.
pub fn exact_k_color(g: &Graph, k: u8) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring::new(Vec::new(), k).expect("empty colouring"));
    }
    if k == 0 {
        return None;
    }
    if k as usize >= n {
        return Some(Coloring::new((1..=n as u8).collect(), k).expect("distinct colours fit"));
    }
    assert!(k <= 64, "palettes above 64 colours are not supported");
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut search = Search::new(g, vec![full; n], k, true);
    search.run().then(|| Coloring::new(search.color, k).expect("search colours fit"))
}

/// Polynomial-time stand-ins would plug in here.
pub trait ColoringOracle: Sync {
    fn k_color(&self, g: &Graph, k: u8) -> Option<Coloring>;
}

/// The backtracking oracle.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactOracle;

impl ColoringOracle for ExactOracle {
    fn k_color(&self, g: &Graph, k: u8) -> Option<Coloring> {
        exact_k_color(g, k)
    }
}

/// Chromatic number, saturated at "five or more".
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SmallChromatic {
    Exactly(u8),
    AtLeastFive,
}

pub fn chromatic_small(g: &Graph) -> SmallChromatic {
    match small_chromatic_coloring(g, &ExactOracle) {
        Some(c) => SmallChromatic::Exactly(c.palette()),
        None => SmallChromatic::AtLeastFive,
    }
}

/// An optimal colouring when `chi(g) <= 4`, with palette exactly `chi(g)`.
/// Edgeless and bipartite graphs are settled without the oracle.
pub fn small_chromatic_coloring(g: &Graph, oracle: &dyn ColoringOracle) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring::empty());
    }
    if g.is_edgeless() {
        return Some(Coloring::new(vec![1; n], 1).expect("one colour"));
    }
    if let Some((a, _)) = g.bipartition(&g.vertices()) {
        let colors = (0..n).map(|v| if a.contains(v) { 1 } else { 2 }).collect();
        return Some(Coloring::new(colors, 2).expect("two colours"));
    }
    for k in 3..=4 {
        if let Some(c) = oracle.k_color(g, k) {
            return Some(c);
        }
    }
    None
}

/// Calls `visit` on every proper colouring of `order` (in that vertex order,
/// lexicographically by colour) that is consistent with the colours already
/// in `fixed`. Vertices of `order` must be unfixed on entry and are unfixed
/// again on return.
pub(crate) fn for_each_precoloring<T>(
    g: &Graph,
    order: &[usize],
    palette: u8,
    fixed: &mut [Option<u8>],
    visit: &mut dyn FnMut(&[Option<u8>]) -> ControlFlow<T>,
) -> Option<T> {
    fn go<T>(
        g: &Graph,
        order: &[usize],
        palette: u8,
        fixed: &mut [Option<u8>],
        visit: &mut dyn FnMut(&[Option<u8>]) -> ControlFlow<T>,
    ) -> ControlFlow<T> {
        let Some((&v, rest)) = order.split_first() else {
            return visit(fixed);
        };
        for c in 1..=palette {
            if g.neighbors(v).iter().any(|u| fixed[u] == Some(c)) {
                continue;
            }
            fixed[v] = Some(c);
            let flow = go(g, rest, palette, fixed, visit);
            fixed[v] = None;
            flow?;
        }
        ControlFlow::Continue(())
    }
    match go(g, order, palette, fixed, visit) {
        ControlFlow::Break(t) => Some(t),
        ControlFlow::Continue(()) => None,
    }
}

/// A vertex whose list from the precolouring has more than two colours.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ListOverflow {
    pub vertex: usize,
    pub size: usize,
}

/// Lists `{1..4}` minus the colours of fixed neighbours, for every unfixed vertex.
pub(crate) fn residual_lists(g: &Graph, fixed: &[Option<u8>]) -> Vec<(usize, ColorSet)> {
    (0..g.order())
        .filter(|&v| fixed[v].is_none())
        .map(|v| {
            let mut l = ColorSet::upto(4);
            for u in g.neighbors(v).iter() {
                if let Some(c) = fixed[u] {
                    l.remove(c);
                }
            }
            (v, l)
        })
        .collect()
}

/// Extends a partial 4-colouring to all of `g` by 2-list colouring the
/// unfixed vertices. `Err` if some residual list has more than two colours.
pub(crate) fn extend_by_two_lists(
    g: &Graph,
    fixed: &[Option<u8>],
) -> std::result::Result<Option<Coloring>, ListOverflow> {
    let residual = residual_lists(g, fixed);
    if let Some(&(vertex, l)) = residual.iter().find(|(_, l)| l.len() > 2) {
        return Err(ListOverflow { vertex, size: l.len() });
    }
    let rest = g.set(residual.iter().map(|&(v, _)| v));
    let (sub, map) = g.induced(&rest);
    let lists: Vec<ColorSet> = residual.iter().map(|&(_, l)| l).collect();
    let solved = two_list_color(&sub, &lists).expect("residual lists have at most two colours");
    Ok(solved.map(|c| {
        let mut full: Vec<u8> = fixed.iter().map(|c| c.unwrap_or(0)).collect();
        for (i, &v) in map.iter().enumerate() {
            full[v] = c.color(i);
        }
        Coloring::new(full, 4).expect("all vertices coloured from 1..=4")
    }))
}

/// Outcome of a precolouring procedure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrecolorResult {
    pub coloring: Option<Coloring>,
    pub trials: u64,
}

/// Four-colours `g` by trying every proper colouring of the magnet `f` and
/// finishing each with 2-list colouring. Returns the extension of the
/// lexicographically least colouring of `f` that extends.
pub fn magnet_color(g: &Graph, f: &VertexSet) -> Result<PrecolorResult> {
    if f.universe() != g.order() {
        return contract("magnet set over the wrong universe");
    }
    if let Some(x) = magnet_failure(g, f) {
        return contract(format!("vertex {x} has no two adjacent neighbours in the magnet"));
    }
    let order = f.to_vec();
    let mut fixed = vec![None; g.order()];
    let mut trials = 0u64;
    let found = for_each_precoloring(g, &order, 4, &mut fixed, &mut |partial| {
        trials += 1;
        match extend_by_two_lists(g, partial) {
            Ok(Some(c)) => ControlFlow::Break(c),
            Ok(None) => ControlFlow::Continue(()),
            Err(_) => unreachable!("a magnet leaves at most two colours per list"),
        }
    });
    Ok(PrecolorResult { coloring: found, trials })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_coloring;
    use crate::patterns::Pattern;

    fn lists(ls: &[&[u8]]) -> Vec<ColorSet> {
        ls.iter().map(|l| ColorSet::new(l.iter().copied())).collect()
    }

    #[test]
    fn two_list_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(two_list_color(&k3, &lists(&[&[1, 2], &[1, 2], &[1, 2]])).unwrap(), None);

        let edge = Graph::path(2);
        let c = two_list_color(&edge, &lists(&[&[1], &[1, 2]])).unwrap().unwrap();
        assert_eq!(c.as_slice(), &[1, 2]);

        let c5 = Graph::cycle(5);
        let l = lists(&[&[1, 2], &[1, 2], &[1, 2], &[1, 2], &[3]]);
        let c = two_list_color(&c5, &l).unwrap().unwrap();
        assert!(respects(&c5, &l, &c));

        assert!(two_list_color(&edge, &lists(&[&[1, 2, 3], &[1]])).is_err());
        assert_eq!(two_list_color(&edge, &lists(&[&[], &[1]])).unwrap(), None);
        assert!(two_list_color(&edge, &lists(&[&[1]])).is_err());
    }

    #[test]
    fn exact_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(exact_list_color(&k5, &[ColorSet::upto(4); 5]).unwrap(), None);
        assert_eq!(exact_list_color(&Graph::empty(0), &[]).unwrap().unwrap().len(), 0);

        let c5 = Graph::cycle(5);
        assert!(exact_k_color(&c5, 2).is_none());
        let c = exact_k_color(&c5, 3).unwrap();
        assert!(verify_coloring(&c5, &c).unwrap());
        assert_eq!(c.color(0), 1);
        assert!(exact_k_color(&Pattern::DoubleWheel.graph(), 4).is_none());
        assert!(exact_k_color(&k5, 4).is_none());
        assert!(exact_k_color(&k5, 5).is_some());
    }

    #[test]
    fn chromatic_small_examples() {
        assert_eq!(chromatic_small(&Graph::empty(3)), SmallChromatic::Exactly(1));
        assert_eq!(chromatic_small(&Graph::empty(0)), SmallChromatic::Exactly(0));
        assert_eq!(chromatic_small(&Graph::path(4)), SmallChromatic::Exactly(2));
        assert_eq!(chromatic_small(&Graph::cycle(5)), SmallChromatic::Exactly(3));
        assert_eq!(chromatic_small(&Graph::complete(4)), SmallChromatic::Exactly(4));
        assert_eq!(chromatic_small(&Graph::complete(5)), SmallChromatic::AtLeastFive);
    }

    #[test]
    fn magnet_examples() {
        let k5 = Graph::complete(5);
        let r = magnet_color(&k5, &k5.set([0, 1, 2])).unwrap();
        assert!(r.coloring.is_none());
        assert_eq!(r.trials, 24);

        // rim 0..5, hubs 5 and 6; magnet = both hubs and the rim edge 0-1
        let dw = Pattern::DoubleWheel.graph();
        let r = magnet_color(&dw, &dw.set([5, 6, 0, 1])).unwrap();
        assert!(r.coloring.is_none());

        let p = Graph::path(3);
        assert!(magnet_color(&p, &p.set([0])).is_err());
    }

    #[test]
    fn precoloring_enumeration_is_lexicographic() {
        let g = Graph::path(2);
        let mut seen = Vec::new();
        let mut fixed = vec![None; 2];
        for_each_precoloring::<()>(&g, &[0, 1], 3, &mut fixed, &mut |f| {
            seen.push((f[0].unwrap(), f[1].unwrap()));
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]);
        assert_eq!(fixed, vec![None, None]);
    }
}
