//! Four-colouring around an induced gem.
//!
//! With the gem `v1..v5` (path `v1 v2 v3 v4`, hub `v5`) fixed, the vertex set
//! splits into classes by their adjacency to the gem. On a reduced input the
//! classes obey a list of structural facts ([`PartitionItem`]); the colouring
//! procedure then only has to try a bounded number of precolourings and
//! finish each with 2-list colouring or a 3-colouring oracle call.

use std::ops::ControlFlow;

use crate::error::{contract, Result};
use crate::graph::{verify_coloring, Coloring, Graph, VertexSet};
use crate::listcolor::{extend_by_two_lists, for_each_precoloring, ColorSet, ListOverflow};
use crate::outcome::{Context, Verdict, Violation};
use crate::patterns::{Embedding, Pattern};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GemPartition {
    /// `v1..v5`.
    pub s: [usize; 5],
    /// `V1..V5`: vertices whose gem neighbourhood, ignoring `vi`, equals that of `vi`.
    pub v: [VertexSet; 5],
    /// Complete to `{v1, v4}`, anticomplete to `{v2, v3}`.
    pub x: VertexSet,
    /// Anticomplete to `v1..v4` with a neighbour in `V5`.
    pub w: VertexSet,
    /// Anticomplete to `v1..v4` and to `V5`.
    pub z: VertexSet,
    /// Components of `Z` with no neighbour in `W`.
    pub z0: VertexSet,
    /// Components of `Z` with a neighbour in `W`.
    pub z1: VertexSet,
}

impl GemPartition {
    pub fn v14(&self) -> VertexSet {
        let mut u = self.v[0].clone();
        for vi in &self.v[1..4] {
            u.union_with(vi);
        }
        u
    }
}

/// Builds the partition around the gem `embedding`, whose entries are
/// `v1..v5` in order.
pub fn build_partition(g: &Graph, embedding: &Embedding) -> Result<GemPartition> {
    let e = embedding.vertices();
    if e.len() != 5 || e.iter().any(|&v| v >= g.order()) {
        return contract("a gem embedding lists five vertices of the graph");
    }
    if !embedding.is_induced(g, &Pattern::Gem.graph()) {
        return contract("embedding does not induce a gem");
    }
    let s: [usize; 5] = [e[0], e[1], e[2], e[3], e[4]];
    let sset = g.set(s);
    let path = g.set(s[..4].iter().copied());
    let n = g.order();

    let v: [VertexSet; 5] = std::array::from_fn(|i| {
        let target = g.neighbors_in(s[i], &sset);
        g.set((0..n).filter(|&x| {
            let mut seen = g.neighbors_in(x, &sset);
            seen.remove(s[i]);
            seen == target
        }))
    });
    let x = g.set((0..n).filter(|&u| {
        g.adjacent(u, s[0]) && g.adjacent(u, s[3]) && !g.adjacent(u, s[1]) && !g.adjacent(u, s[2])
    }));
    let off_path: Vec<usize> =
        (0..n).filter(|&u| !path.contains(u) && g.neighbors(u).is_disjoint(&path)).collect();
    let w = g.set(off_path.iter().copied().filter(|&u| g.neighbors(u).intersects(&v[4])));
    let z = g.set(off_path.iter().copied().filter(|&u| {
        !v[4].contains(u) && g.neighbors(u).is_disjoint(&v[4])
    }));
    let mut z1 = g.empty_set();
    for comp in g.components_within(&z) {
        if g.neighborhood_of(&comp).intersects(&w) {
            z1.union_with(&comp);
        }
    }
    let z0 = z.difference(&z1);
    Ok(GemPartition { s, v, x, w, z, z0, z1 })
}

/// The structural facts the colouring procedure relies on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum PartitionItem {
    XNonEmpty,
    XAdjacency,
    Covering,
    V5CompleteToPath,
    WAdjacency,
    ZAnticompleteToPath,
    Z1CompleteToX,
    XComponentsCliqueModules,
    Z0ComponentsCliqueModules,
    XHomogeneousWithoutZ0,
    WStarExists,
}

impl PartitionItem {
    pub const ALL: [PartitionItem; 11] = [
        PartitionItem::XNonEmpty,
        PartitionItem::XAdjacency,
        PartitionItem::Covering,
        PartitionItem::V5CompleteToPath,
        PartitionItem::WAdjacency,
        PartitionItem::ZAnticompleteToPath,
        PartitionItem::Z1CompleteToX,
        PartitionItem::XComponentsCliqueModules,
        PartitionItem::Z0ComponentsCliqueModules,
        PartitionItem::XHomogeneousWithoutZ0,
        PartitionItem::WStarExists,
    ];

    pub fn id(self) -> &'static str {
        match self {
            PartitionItem::XNonEmpty => "x-nonempty",
            PartitionItem::XAdjacency => "x-adjacency",
            PartitionItem::Covering => "covering",
            PartitionItem::V5CompleteToPath => "v5-complete",
            PartitionItem::WAdjacency => "w-adjacency",
            PartitionItem::ZAnticompleteToPath => "z-anticomplete",
            PartitionItem::Z1CompleteToX => "z1-complete-to-x",
            PartitionItem::XComponentsCliqueModules => "x-components",
            PartitionItem::Z0ComponentsCliqueModules => "z0-components",
            PartitionItem::XHomogeneousWithoutZ0 => "x-homogeneous",
            PartitionItem::WStarExists => "w-star",
        }
    }

    fn holds(self, g: &Graph, p: &GemPartition) -> bool {
        let v14 = p.v14();
        match self {
            PartitionItem::XNonEmpty => !p.x.is_empty(),
            PartitionItem::XAdjacency => {
                let far = p.v[1].union(&p.v[2]).union(&p.v[4]);
                g.sets_anticomplete(&p.x, &far) && g.sets_complete(&p.x, &p.v[0].union(&p.v[3]))
            }
            PartitionItem::Covering => {
                let parts = [&p.v[0], &p.v[1], &p.v[2], &p.v[3], &p.v[4], &p.x, &p.w, &p.z];
                let total: usize = parts.iter().map(|s| s.len()).sum();
                let mut union = g.empty_set();
                for s in parts {
                    union.union_with(s);
                }
                total == g.order() && union.len() == g.order()
            }
            PartitionItem::V5CompleteToPath => g.sets_complete(&p.v[4], &v14),
            PartitionItem::WAdjacency => {
                g.sets_complete(&p.w, &p.x) && g.sets_anticomplete(&p.w, &v14)
            }
            PartitionItem::ZAnticompleteToPath => g.sets_anticomplete(&p.z, &v14),
            PartitionItem::Z1CompleteToX => g.sets_complete(&p.z1, &p.x),
            PartitionItem::XComponentsCliqueModules => clique_modules(g, &p.x),
            PartitionItem::Z0ComponentsCliqueModules => clique_modules(g, &p.z0),
            PartitionItem::XHomogeneousWithoutZ0 => {
                let rest = g.vertices().difference(&p.z0).difference(&p.x);
                let homogeneous = rest.iter().all(|u| {
                    let seen = g.neighbors(u).intersection_len(&p.x);
                    seen == 0 || seen == p.x.len()
                });
                homogeneous
            }
            PartitionItem::WStarExists => p.z1.is_empty() || choose_w_star(g, p).is_some(),
        }
    }
}

fn clique_modules(g: &Graph, s: &VertexSet) -> bool {
    g.components_within(s)
        .iter()
        .all(|c| g.is_clique(c) && crate::modular::is_homogeneous(g, c))
}

/// Items whose statement fails on `p`, in declaration order.
pub fn verify_partition(g: &Graph, p: &GemPartition) -> Vec<PartitionItem> {
    PartitionItem::ALL.into_iter().filter(|item| !item.holds(g, p)).collect()
}

/// Least `w` in `W` with a `Z1`-neighbour such that `N(w) ∩ Z1` is complete
/// to `Z1 \ N(w)`.
pub fn choose_w_star(g: &Graph, p: &GemPartition) -> Option<usize> {
    p.w.iter().find(|&w| {
        let inside = g.neighbors_in(w, &p.z1);
        !inside.is_empty() && g.sets_complete(&inside, &p.z1.difference(&inside))
    })
}

/// A component of `G[V5]` with at least two vertices, split into its two
/// colour classes, with the `W`-vertices sorted by which classes they see.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigComponentData {
    pub a: VertexSet,
    pub b: VertexSet,
    /// Neighbours in `a` only.
    pub w_a: VertexSet,
    /// Neighbours in `b` only.
    pub w_b: VertexSet,
    /// Neighbours in both.
    pub w_both: VertexSet,
}

impl BigComponentData {
    fn swapped(self) -> BigComponentData {
        BigComponentData { a: self.b, b: self.a, w_a: self.w_b, w_b: self.w_a, w_both: self.w_both }
    }
}

/// Big components of `G[V5]`, or `None` if `G[V5]` is not bipartite.
pub fn big_components(g: &Graph, p: &GemPartition) -> Option<Vec<BigComponentData>> {
    let mut out = Vec::new();
    for comp in g.components_within(&p.v[4]) {
        if comp.len() < 2 {
            continue;
        }
        let (a, b) = g.bipartition(&comp)?;
        let mut data = BigComponentData {
            w_a: g.empty_set(),
            w_b: g.empty_set(),
            w_both: g.empty_set(),
            a,
            b,
        };
        for w in p.w.iter() {
            match (g.neighbors(w).intersects(&data.a), g.neighbors(w).intersects(&data.b)) {
                (true, true) => data.w_both.insert(w),
                (true, false) => data.w_a.insert(w),
                (false, true) => data.w_b.insert(w),
                (false, false) => false,
            };
        }
        out.push(data);
    }
    Some(out)
}

/// Decides `g` by solving `G \ Z0` with `recurse` and extending the result.
pub fn peel_and_extend(
    g: &Graph,
    p: &GemPartition,
    ctx: &mut Context<'_>,
    recurse: &mut dyn FnMut(&Graph, &mut Context<'_>) -> Verdict,
) -> Verdict {
    if p.z0.is_empty() {
        return color_with_gem(g, p, ctx);
    }
    ctx.note(|| format!("peeling {} vertices with no path to W", p.z0.len()));
    let (sub, map) = g.without(&p.z0);
    let c = match recurse(&sub, ctx) {
        Verdict::FourColorable(c) => c,
        other => return other,
    };
    let mut colors = vec![0u8; g.order()];
    for (i, &v) in map.iter().enumerate() {
        colors[v] = c.color(i);
    }
    match extend_over_z0(g, p, colors) {
        Ok(c) => Verdict::FourColorable(c),
        Err(v) => Verdict::InvariantViolation(vec![v]),
    }
}

fn largest(components: &[&VertexSet]) -> Option<usize> {
    // first maximum, i.e. least minimum vertex among ties
    let mut best: Option<usize> = None;
    for (i, c) in components.iter().enumerate() {
        if best.is_none_or(|b| c.len() > components[b].len()) {
            best = Some(i);
        }
    }
    best
}

fn extend_over_z0(
    g: &Graph,
    p: &GemPartition,
    mut colors: Vec<u8>,
) -> std::result::Result<Coloring, Violation> {
    let x_components = g.components_within(&p.x);
    let refs: Vec<&VertexSet> = x_components.iter().collect();
    let Some(big) = largest(&refs) else {
        return Err(Violation::new("x-nonempty", "no X-component to colour Z0 against"));
    };
    let mut palette: Vec<u8> = x_components[big].iter().map(|v| colors[v]).collect();
    palette.sort_unstable();
    palette.dedup();
    for y in &x_components {
        if !g.is_clique(y) || y.len() > palette.len() {
            return Err(Violation::new("x-components", "an X-component is not a clique"));
        }
        for (v, &c) in y.iter().zip(&palette) {
            colors[v] = c;
        }
    }
    for u in g.components_within(&p.z0) {
        let neighborhood = g.neighborhood_of(&u);
        let adjacent: Vec<&VertexSet> =
            x_components.iter().filter(|y| y.intersects(&neighborhood)).collect();
        let Some(i) = largest(&adjacent) else {
            return Err(Violation::new("z0-neighbourhood", "a Z0-component has no neighbour in X"));
        };
        let mut free = ColorSet::upto(4);
        for v in adjacent[i].iter() {
            free.remove(colors[v]);
        }
        if u.len() > free.len() {
            return Err(Violation::new("z0-components", "a Z0-component outnumbers its free colours"));
        }
        for (v, c) in u.iter().zip(free.iter()) {
            colors[v] = c;
        }
    }
    let c = Coloring::new(colors, 4)
        .map_err(|e| Violation::new("z0-extension", e.to_string()))?;
    if verify_coloring(g, &c).unwrap_or(false) {
        Ok(c)
    } else {
        Err(Violation::new("z0-extension", "extension over Z0 is not proper"))
    }
}

type Step = ControlFlow<Verdict>;

fn overflow(o: ListOverflow) -> Step {
    ControlFlow::Break(Verdict::violation(
        "two-lists",
        format!("vertex {} is left with {} colours", o.vertex, o.size),
    ))
}

fn two_lists(g: &Graph, fixed: &[Option<u8>], ctx: &mut Context<'_>) -> Step {
    ctx.stats.two_sat_calls += 1;
    match extend_by_two_lists(g, fixed) {
        Ok(Some(c)) => ControlFlow::Break(Verdict::FourColorable(c)),
        Ok(None) => ControlFlow::Continue(()),
        Err(o) => overflow(o),
    }
}

fn proper_on_fixed(g: &Graph, fixed: &[Option<u8>]) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| fixed[u].is_none() || fixed[u] != fixed[v])
}

/// The precolouring procedure for a partition with `Z0` empty.
pub fn color_with_gem(g: &Graph, p: &GemPartition, ctx: &mut Context<'_>) -> Verdict {
    if !p.z0.is_empty() {
        return Verdict::violation("z0-empty", "precolouring needs Z0 peeled first");
    }
    if !g.is_clique(&p.x) {
        return Verdict::violation("x-clique", "X is not a clique after peeling");
    }
    match p.x.len() {
        0 => Verdict::violation("x-nonempty", "X is empty"),
        1 => color_single_x(g, p, ctx),
        2 | 3 => color_anchor_with_x(g, p, ctx),
        k => Verdict::violation("x-clique", format!("X is a clique on {k} vertices")),
    }
}

fn color_anchor_with_x(g: &Graph, p: &GemPartition, ctx: &mut Context<'_>) -> Verdict {
    ctx.note(|| format!("gem route, |X| = {}, precolouring S and X", p.x.len()));
    let mut order: Vec<usize> = p.s.to_vec();
    order.extend(p.x.iter());
    let mut fixed = vec![None; g.order()];
    let found = for_each_precoloring(g, &order, 4, &mut fixed, &mut |f| {
        ctx.stats.precolorings += 1;
        two_lists(g, f, ctx)
    });
    found.unwrap_or(Verdict::NotFourColorable)
}

fn color_single_x(g: &Graph, p: &GemPartition, ctx: &mut Context<'_>) -> Verdict {
    let x0 = p.x.first().expect("X has one vertex");
    ctx.note(|| format!("gem route, X = {{{x0}}}"));
    let order = [p.s[0], p.s[1], p.s[2], p.s[3], x0];
    let mut fixed = vec![None; g.order()];
    let found = for_each_precoloring(g, &order, 4, &mut fixed, &mut |f| {
        ctx.stats.precolorings += 1;
        let used = ColorSet::new(p.s[..4].iter().map(|&v| f[v].expect("path is precoloured")));
        match used.len() {
            3 => {
                let forced = ColorSet::upto(4).without(used).min().expect("one colour missing");
                case_one(g, p, ctx, f, forced, x0)
            }
            2 => case_two(g, p, ctx, f, x0),
            _ => ControlFlow::Continue(()),
        }
    });
    found.unwrap_or(Verdict::NotFourColorable)
}

/// `V5` must take the single colour `forced`.
fn case_one(
    g: &Graph,
    p: &GemPartition,
    ctx: &mut Context<'_>,
    f: &[Option<u8>],
    forced: u8,
    x0: usize,
) -> Step {
    if !g.is_stable(&p.v[4]) {
        return ControlFlow::Continue(());
    }
    let mut fixed = f.to_vec();
    for v in p.v[4].iter() {
        fixed[v] = Some(forced);
    }
    if !proper_on_fixed(g, &fixed) {
        return ControlFlow::Continue(());
    }
    if fixed[x0] == Some(forced) {
        // W and Z see `forced` on every side and nothing of V1..V4
        let wz = p.w.union(&p.z);
        let (sub, map) = g.induced(&wz);
        let Some(c) = ctx.k_color(&sub, 3) else {
            return ControlFlow::Continue(());
        };
        let palette: Vec<u8> = ColorSet::upto(4).without(ColorSet::new([forced])).iter().collect();
        for (i, &v) in map.iter().enumerate() {
            fixed[v] = Some(palette[(c.color(i) - 1) as usize]);
        }
        return two_lists(g, &fixed, ctx);
    }
    let mut extra = Vec::new();
    if !p.z1.is_empty() {
        let Some(w_star) = choose_w_star(g, p) else {
            return ControlFlow::Break(Verdict::violation("w-star", "no W-vertex splits Z1 cleanly"));
        };
        extra.push(w_star);
        let inside = g.neighbors_in(w_star, &p.z1);
        if inside.len() != p.z1.len() {
            extra.push(inside.first().expect("w* has a Z1-neighbour"));
        }
    }
    let found = for_each_precoloring(g, &extra, 4, &mut fixed, &mut |h| two_lists(g, h, ctx));
    match found {
        Some(v) => ControlFlow::Break(v),
        None => ControlFlow::Continue(()),
    }
}

/// The path `v1..v4` uses two colours.
fn case_two(g: &Graph, p: &GemPartition, ctx: &mut Context<'_>, f: &[Option<u8>], x0: usize) -> Step {
    let edge = p.v[..4].iter().find_map(|vi| {
        vi.iter().find_map(|a| g.neighbors_in(a, vi).iter().find(|&b| b > a).map(|b| (a, b)))
    });
    if let Some((a, b)) = edge {
        let mut fixed = f.to_vec();
        let extra: Vec<usize> = [a, b].into_iter().filter(|&v| fixed[v].is_none()).collect();
        let path = [p.s[0], p.s[1], p.s[2], p.s[3], a, b];
        let found = for_each_precoloring(g, &extra, 4, &mut fixed, &mut |h| {
            let used = ColorSet::new(path.iter().map(|&v| h[v].expect("precoloured")));
            if used.len() != 3 {
                return ControlFlow::Continue(());
            }
            let forced = ColorSet::upto(4).without(used).min().expect("one colour missing");
            case_one(g, p, ctx, h, forced, x0)
        });
        return match found {
            Some(v) => ControlFlow::Break(v),
            None => ControlFlow::Continue(()),
        };
    }

    let step = case_two_stable(g, p, ctx, f, x0);
    if ctx.options.paranoid {
        let mut mirrored = f.to_vec();
        let alpha = f[p.s[0]].expect("precoloured");
        let beta = f[p.s[1]].expect("precoloured");
        let other = ColorSet::upto(4)
            .without(ColorSet::new([alpha, beta, f[x0].expect("precoloured")]))
            .min()
            .expect("x0 sees both path colours");
        mirrored[x0] = Some(other);
        let twin = case_two_stable(g, p, ctx, &mirrored, x0);
        let feasible = |s: &Step| matches!(s, ControlFlow::Break(Verdict::FourColorable(_)));
        if feasible(&step) != feasible(&twin) {
            return ControlFlow::Break(Verdict::violation(
                "case-two-symmetry",
                "swapping the colour of x0 changed feasibility",
            ));
        }
    }
    step
}

/// `V1..V4` stable, `V5` limited to the two colours missing from the path.
fn case_two_stable(
    g: &Graph,
    p: &GemPartition,
    ctx: &mut Context<'_>,
    f: &[Option<u8>],
    x0: usize,
) -> Step {
    let alpha = f[p.s[0]].expect("precoloured");
    let beta = f[p.s[1]].expect("precoloured");
    let four = f[x0].expect("precoloured");
    let three = ColorSet::upto(4)
        .without(ColorSet::new([alpha, beta, four]))
        .min()
        .expect("x0 sees both path colours");

    let Some(big) = big_components(g, p) else {
        return ControlFlow::Continue(());
    };
    let mut oriented = Vec::with_capacity(big.len());
    let mut t = g.empty_set();
    for data in big {
        if !data.w_a.is_empty() && !data.w_b.is_empty() {
            return ControlFlow::Break(Verdict::violation(
                "one-sided-w",
                "W has private neighbours on both sides of a V5-component",
            ));
        }
        let data = if data.w_b.is_empty() { data } else { data.swapped() };
        let Some(d) = data.b.iter().find(|&d| data.w_both.is_subset(g.neighbors(d))) else {
            return ControlFlow::Break(Verdict::violation(
                "universal-in-side",
                "no vertex of a V5-side is complete to the W-vertices seeing both sides",
            ));
        };
        t.insert(d);
        oriented.push(data);
    }
    if !g.is_stable(&t) {
        return ControlFlow::Break(Verdict::violation("t-stable", "chosen V5 representatives are adjacent"));
    }

    let h_set = p.z1.union(&p.w).union(&t).union(&g.set([p.s[0], p.s[1]]));
    let (h, map) = g.induced(&h_set);
    let Some(c) = ctx.k_color(&h, 3) else {
        return ControlFlow::Continue(());
    };
    let index = |v: usize| map.iter().position(|&u| u == v).expect("v1 and v2 are in H");
    let (g1, g2) = (c.color(index(p.s[0])), c.color(index(p.s[1])));
    let g3 = 6 - g1 - g2;
    let relabel = |col: u8| {
        if col == g1 {
            alpha
        } else if col == g2 {
            beta
        } else {
            debug_assert_eq!(col, g3);
            three
        }
    };

    let mut colors = vec![0u8; g.order()];
    for (i, &v) in map.iter().enumerate() {
        colors[v] = relabel(c.color(i));
    }
    for v in p.v[0].union(&p.v[2]).iter() {
        colors[v] = alpha;
    }
    for v in p.v[1].union(&p.v[3]).iter() {
        colors[v] = beta;
    }
    for v in p.v[4].iter() {
        colors[v] = four;
    }
    for data in &oriented {
        for v in data.b.iter() {
            colors[v] = three;
        }
    }
    colors[x0] = four;
    let lifted = Coloring::new(colors, 4);
    match lifted {
        Ok(c) if verify_coloring(g, &c).unwrap_or(false) => ControlFlow::Break(Verdict::FourColorable(c)),
        _ => ControlFlow::Break(Verdict::violation(
            "h-lift",
            "3-colouring of the auxiliary graph did not lift to a proper colouring",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::listcolor::exact_k_color;
    use crate::patterns::{find_induced, is_in_class};

    fn gem() -> Graph {
        Pattern::Gem.graph()
    }

    fn identity() -> Embedding {
        Embedding(vec![0, 1, 2, 3, 4])
    }

    /// Gem plus x adjacent to exactly v1 and v4.
    fn gem_x() -> Graph {
        gem().with_vertex(&[0, 3]).unwrap()
    }

    #[test]
    fn partition_of_bare_gem() {
        let g = gem();
        let p = build_partition(&g, &identity()).unwrap();
        for i in 0..5 {
            assert_eq!(p.v[i], g.set([i]));
        }
        assert!(p.x.is_empty() && p.w.is_empty() && p.z.is_empty());
        assert_eq!(verify_partition(&g, &p), vec![PartitionItem::XNonEmpty]);
    }

    #[test]
    fn partition_with_x_w_z() {
        let g = gem_x();
        assert!(is_in_class(&g).is_none());
        let p = build_partition(&g, &identity()).unwrap();
        assert_eq!(p.x, g.set([5]));
        assert!(p.w.is_empty() && p.z.is_empty());
        assert!(verify_partition(&g, &p).is_empty());

        let g = g.with_vertex(&[4, 5]).unwrap().with_vertex(&[6, 5]).unwrap();
        let p = build_partition(&g, &identity()).unwrap();
        assert_eq!(p.w, g.set([6]));
        assert_eq!(p.z1, g.set([7]));
        assert!(p.z0.is_empty());
    }

    #[test]
    fn corrupted_partition_is_reported() {
        let g = gem_x();
        let mut p = build_partition(&g, &identity()).unwrap();
        p.w.insert(5);
        let items = verify_partition(&g, &p);
        assert!(items.contains(&PartitionItem::Covering));
    }

    #[test]
    fn rejects_non_gem() {
        let g = gem_x();
        assert!(build_partition(&g, &Embedding(vec![0, 1, 2, 3, 5])).is_err());
        assert!(build_partition(&g, &Embedding(vec![0, 1, 2])).is_err());
    }

    fn recurse_exact(g: &Graph, _: &mut Context<'_>) -> Verdict {
        match exact_k_color(g, 4) {
            Some(c) => Verdict::FourColorable(c),
            None => Verdict::NotFourColorable,
        }
    }

    #[test]
    fn peel_single_z0_vertex() {
        // z0 sees only x
        let g = gem_x().with_vertex(&[5]).unwrap();
        let p = build_partition(&g, &identity()).unwrap();
        assert_eq!(p.z0, g.set([6]));
        let mut ctx = Context::default();
        let Verdict::FourColorable(c) = peel_and_extend(&g, &p, &mut ctx, &mut recurse_exact) else {
            panic!("peeling failed");
        };
        assert!(verify_coloring(&g, &c).unwrap());
        assert_ne!(c.color(6), c.color(5));

        // colours outside X and Z0 come from the recursive solution
        let (sub, map) = g.without(&p.z0);
        let base = exact_k_color(&sub, 4).unwrap();
        for (i, &v) in map.iter().enumerate() {
            if !p.x.contains(v) {
                assert_eq!(c.color(v), base.color(i));
            }
        }
    }

    #[test]
    fn peel_propagates_infeasibility() {
        let g = gem_x().with_vertex(&[5]).unwrap();
        let p = build_partition(&g, &identity()).unwrap();
        let mut ctx = Context::default();
        let v = peel_and_extend(&g, &p, &mut ctx, &mut |_, _| Verdict::NotFourColorable);
        assert_eq!(v, Verdict::NotFourColorable);
    }

    #[test]
    fn single_x_running_example() {
        let g = gem_x().with_vertex(&[4, 5]).unwrap().with_vertex(&[6, 5]).unwrap();
        let p = build_partition(&g, &identity()).unwrap();
        let mut ctx = Context::default();
        let Verdict::FourColorable(c) = color_with_gem(&g, &p, &mut ctx) else { panic!() };
        assert!(verify_coloring(&g, &c).unwrap());
    }

    #[test]
    fn agrees_with_oracle_on_gem_extensions() {
        // every way to add one or two vertices to gem + x
        let base = gem_x();
        let n = base.order();
        let mut checked = 0;
        for mask in 0u32..1 << n {
            let nb: Vec<usize> = (0..n).filter(|&i| mask & 1 << i != 0).collect();
            let g = base.with_vertex(&nb).unwrap();
            if is_in_class(&g).is_some() {
                continue;
            }
            let Some(gem) = find_induced(&g, Pattern::Gem) else { continue };
            let p = build_partition(&g, &gem).unwrap();
            if !verify_partition(&g, &p).is_empty() || !p.z0.is_empty() || !g.is_clique(&p.x) {
                continue;
            }
            let mut ctx = Context::default();
            ctx.options.paranoid = true;
            let v = color_with_gem(&g, &p, &mut ctx);
            let expected = exact_k_color(&g, 4).is_some();
            match v {
                Verdict::FourColorable(c) => {
                    assert!(expected);
                    assert!(verify_coloring(&g, &c).unwrap());
                }
                Verdict::NotFourColorable => assert!(!expected),
                other => panic!("unexpected verdict {other:?}"),
            }
            checked += 1;
        }
        assert!(checked > 0);
    }

    #[test]
    fn case_one_skips_unstable_v5() {
        // a second hub adjacent to v5 and the path: V5 has an edge
        let g = gem_x().with_vertex(&[0, 1, 2, 3, 4]).unwrap();
        let p = build_partition(&g, &identity()).unwrap();
        assert_eq!(p.v[4], g.set([4, 6]));
        let mut fixed = vec![None; g.order()];
        for (v, c) in [(0, 1), (1, 2), (2, 3), (3, 1), (5, 2)] {
            fixed[v] = Some(c);
        }
        let mut ctx = Context::default();
        assert_eq!(case_one(&g, &p, &mut ctx, &fixed, 4, 5), ControlFlow::Continue(()));
    }
}
