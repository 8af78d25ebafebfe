//! The gem-free route.
//!
//! A gem-free graph in the class has no long odd antihole, and no long odd
//! hole because it has no induced P6, so without an induced C5 it is perfect.
//! Both branches hand the colouring itself to the oracle; the branch taken is
//! reported so callers can check it against the C5 detector.

use crate::error::{contract, Result};
use crate::graph::{Coloring, Graph};
use crate::listcolor::{ColoringOracle, ExactOracle};
use crate::modular::is_prime;
use crate::patterns::{contains, is_in_class, Pattern};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GemFreeRoute {
    Perfect,
    ContainsC5,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GemFreeVerdict {
    pub route: GemFreeRoute,
    pub coloring: Option<Coloring>,
}

fn require_gem_free_class(g: &Graph) -> Result<()> {
    if let Some(w) = is_in_class(g) {
        return contract(format!("graph contains an induced {}", w.pattern.name()));
    }
    if contains(g, Pattern::Gem) {
        return contract("graph contains an induced gem");
    }
    Ok(())
}

/// Decides `k`-colourability of a (P6, bull, gem)-free graph.
pub fn decide_gemfree(g: &Graph, k: u8) -> Result<GemFreeVerdict> {
    require_gem_free_class(g)?;
    Ok(decide_gemfree_with(g, k, &ExactOracle))
}

/// [`decide_gemfree`] without the precondition scan.
pub fn decide_gemfree_with(g: &Graph, k: u8, oracle: &dyn ColoringOracle) -> GemFreeVerdict {
    let route = if contains(g, Pattern::C5) { GemFreeRoute::ContainsC5 } else { GemFreeRoute::Perfect };
    GemFreeVerdict { route, coloring: oracle.k_color(g, k) }
}

/// Whether `g` is triangle-free, for a prime gem-free graph of the class
/// that contains a C5. Such graphs are expected to be triangle-free, so a
/// `false` here is a counterexample worth reporting.
pub fn check_triangle_free_theorem(g: &Graph) -> Result<bool> {
    require_gem_free_class(g)?;
    if !contains(g, Pattern::C5) {
        return contract("graph contains no induced C5");
    }
    if !is_prime(g) {
        return contract("graph is not prime");
    }
    Ok(!contains(g, Pattern::K3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes() {
        let v = decide_gemfree(&Graph::path(5), 4).unwrap();
        assert_eq!(v.route, GemFreeRoute::Perfect);
        assert!(v.coloring.is_some());

        let v = decide_gemfree(&Graph::cycle(5), 4).unwrap();
        assert_eq!(v.route, GemFreeRoute::ContainsC5);
        assert!(v.coloring.is_some());

        let v = decide_gemfree(&Graph::complete(5), 4).unwrap();
        assert_eq!(v, GemFreeVerdict { route: GemFreeRoute::Perfect, coloring: None });

        assert!(decide_gemfree(&Pattern::Gem.graph(), 4).is_err());
        assert!(decide_gemfree(&Graph::path(6), 4).is_err());
    }

    #[test]
    fn triangle_free_probe() {
        assert!(check_triangle_free_theorem(&Graph::cycle(5)).unwrap());
        assert!(check_triangle_free_theorem(&Graph::path(4)).is_err());
        // C5 plus a true twin is not prime
        let twin = Graph::cycle(5).with_vertex(&[0, 1, 4]).unwrap();
        assert!(check_triangle_free_theorem(&twin).is_err());
    }

    #[test]
    fn petersen_probe() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let petersen = Graph::new(10, &edges).unwrap();
        match check_triangle_free_theorem(&petersen) {
            Ok(free) => assert!(free),
            // the Petersen graph has an induced P6, so it is outside the class
            Err(_) => assert!(is_in_class(&petersen).is_some()),
        }
    }
}
