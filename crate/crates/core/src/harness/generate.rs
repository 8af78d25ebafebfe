//! Seeded generation of graphs in the class.
//!
//! Plain rejection sampling almost never accepts beyond ten or so vertices
//! at middling densities, so the campaign mostly grows graphs one vertex at
//! a time and rejects only the new vertex. Substituting a twin for a vertex
//! keeps a graph in the class (both forbidden graphs are prime), which gives
//! a fallback that always succeeds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::patterns::is_in_class;

const VERTEX_TRIES: usize = 24;

/// A `G(n, p)` draw, kept only if it is in the class.
pub fn generate_in_class(n: usize, p: f64, seed: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, &edges).expect("generated edges are valid");
    is_in_class(&g).is_none().then_some(g)
}

fn add_twin(g: &Graph, rng: &mut impl Rng) -> Graph {
    let u = rng.gen_range(0..g.order());
    let mut nb = g.neighbors(u).to_vec();
    if rng.gen_bool(0.5) {
        nb.push(u);
    }
    g.with_vertex(&nb).expect("twin neighbourhood is valid")
}

/// Adds a vertex whose neighbourhood is `forced` plus each vertex of
/// `optional` with probability `p`; falls back to a twin.
fn grow_step(g: &Graph, forced: &[usize], optional: &[usize], p: f64, rng: &mut impl Rng) -> Graph {
    for _ in 0..VERTEX_TRIES {
        let mut nb = forced.to_vec();
        nb.extend(optional.iter().copied().filter(|_| rng.gen_bool(p)));
        let h = g.with_vertex(&nb).expect("neighbourhood is valid");
        if is_in_class(&h).is_none() {
            return h;
        }
    }
    add_twin(g, rng)
}

/// A graph in the class on `n` vertices, grown vertex by vertex with
/// attachment probability `p`.
pub fn grow_in_class(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut g = Graph::empty(0);
    while g.order() < n {
        let others: Vec<usize> = (0..g.order()).collect();
        g = if g.order() == 0 { Graph::empty(1) } else { grow_step(&g, &[], &others, p, &mut rng) };
    }
    g
}

/// Role of a new vertex relative to the anchor gem `0..5` and `x0 = 5`.
const GEM_ROLES: [&[usize]; 8] = [
    &[1, 4],       // like v1
    &[0, 2, 4],    // like v2
    &[1, 3, 4],    // like v3
    &[2, 4],       // like v4
    &[0, 1, 2, 3], // like v5
    &[0, 3, 5],    // in X, seeing x0
    &[4, 5],       // in W, seeing v5 and x0
    &[5],          // in Z, seeing x0
];

/// A graph in the class on `n >= 6` vertices containing the gem `0..5` with
/// `x0 = 5` complete to `{v1, v4}`; every other vertex is attached in one
/// of the roles the gem partition distinguishes, plus random edges to the
/// non-anchor vertices.
pub fn gem_seeded(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut g = crate::patterns::Pattern::Gem.graph().with_vertex(&[0, 3]).expect("gem plus x0");
    while g.order() < n {
        let role = GEM_ROLES[rng.gen_range(0..GEM_ROLES.len())];
        let optional: Vec<usize> = (6..g.order()).collect();
        g = grow_step(&g, role, &optional, p, &mut rng);
    }
    g
}

/// The complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    Graph::new(n, &edges).expect("multipartite edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{contains, Pattern};

    #[test]
    fn rejection_examples() {
        assert_eq!(generate_in_class(5, 0.0, 7), Some(Graph::empty(5)));
        assert_eq!(generate_in_class(6, 1.0, 7), Some(Graph::complete(6)));
        for seed in 0..20 {
            assert_eq!(generate_in_class(8, 0.4, seed), generate_in_class(8, 0.4, seed));
        }
    }

    #[test]
    fn grown_graphs_are_in_class_and_reproducible() {
        for seed in 0..10 {
            let g = grow_in_class(12, 0.5, seed);
            assert_eq!(g.order(), 12);
            assert!(is_in_class(&g).is_none());
            assert_eq!(g, grow_in_class(12, 0.5, seed));
        }
    }

    #[test]
    fn gem_seeded_graphs_keep_their_gem() {
        for seed in 0..10 {
            let g = gem_seeded(11, 0.3, seed);
            assert!(is_in_class(&g).is_none());
            assert!(contains(&g, Pattern::Gem));
        }
    }

    #[test]
    fn multipartite() {
        let g = complete_multipartite(&[2, 2, 1]);
        assert_eq!(g.edge_count(), 8);
        assert!(is_in_class(&g).is_none());
    }
}
