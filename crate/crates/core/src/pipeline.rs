//! The top-level decision procedure.
//!
//! Order of steps on a graph in the class:
//! 1. split into components, then into co-components;
//! 2. replace non-clique maximal modules by cliques until quasi-prime;
//! 3. reject K5 and the double wheel;
//! 4. precolour an F0, else one of F1..F6, as a magnet;
//! 5. around a gem, peel and precolour;
//! 6. otherwise take the gem-free route.
//!
//! Every colouring returned is checked against the input before it leaves.

use crate::gemcase::{build_partition, peel_and_extend, verify_partition};
use crate::gemfree::{decide_gemfree_with, GemFreeRoute};
use crate::graph::{verify_coloring, Coloring, Graph};
use crate::listcolor::{magnet_color, small_chromatic_coloring, ColoringOracle, ExactOracle};
use crate::modular::{is_quasi_prime, lift_coloring, reduce_with, ReduceOutcome, Reduction};
use crate::outcome::{Context, Options, Outcome, Route, TraceEvent, Verdict, Violation};
use crate::patterns::{find_induced, is_in_class, is_magnet, Pattern};

/// Decides 4-colourability with the exact oracle.
pub fn decide4(g: &Graph) -> Outcome {
    decide4_with(g, &ExactOracle, Options::default())
}

/// [`decide4`] plus an ordered log of the steps taken.
pub fn decide4_with_trace(g: &Graph) -> (Outcome, Vec<TraceEvent>) {
    let mut ctx = Context::new(&ExactOracle, Options::default(), true);
    let outcome = run(g, &mut ctx);
    (outcome, ctx.take_trace())
}

pub fn decide4_with(g: &Graph, oracle: &dyn ColoringOracle, options: Options) -> Outcome {
    let mut ctx = Context::new(oracle, options, false);
    run(g, &mut ctx)
}

/// Runs the pipeline with a caller-supplied context.
pub fn run(g: &Graph, ctx: &mut Context<'_>) -> Outcome {
    let verdict = if ctx.options.assume_class { solve_in_class(g, ctx) } else { solve(g, ctx) };
    let verdict = match verdict {
        Verdict::FourColorable(c) if !verify_coloring(g, &c).unwrap_or(false) => {
            Verdict::violation("soundness", "returned colouring is not proper")
        }
        other => other,
    };
    ctx.note(|| format!("verdict: {}", verdict.status()));
    Outcome { verdict, stats: ctx.stats.clone() }
}

fn set_route(ctx: &mut Context<'_>, route: Route) {
    if ctx.depth == 0 && ctx.stats.route.is_none() {
        ctx.stats.route = Some(route);
    }
}

/// Solves a strictly smaller graph one level deeper.
fn descend(
    g: &Graph,
    ctx: &mut Context<'_>,
    step: fn(&Graph, &mut Context<'_>) -> Verdict,
) -> Verdict {
    ctx.depth += 1;
    ctx.stats.recursive_calls += 1;
    ctx.stats.max_depth = ctx.stats.max_depth.max(ctx.depth);
    let v = step(g, ctx);
    ctx.depth -= 1;
    v
}

fn solve(g: &Graph, ctx: &mut Context<'_>) -> Verdict {
    if let Some(w) = is_in_class(g) {
        ctx.note(|| format!("induced {} found", w.pattern.name()));
        set_route(ctx, Route::OutOfClass);
        return Verdict::OutOfClass(w);
    }
    solve_in_class(g, ctx)
}

fn solve_in_class(g: &Graph, ctx: &mut Context<'_>) -> Verdict {
    let n = g.order();
    if n <= 1 {
        set_route(ctx, Route::Empty);
        return Verdict::FourColorable(Coloring::new(vec![1; n], 4).expect("at most one vertex"));
    }

    let components = g.components();
    if components.len() > 1 {
        ctx.note(|| format!("{} components", components.len()));
        set_route(ctx, Route::Components);
        let mut colors = vec![0u8; n];
        for comp in &components {
            let (sub, map) = g.induced(comp);
            match descend(&sub, ctx, solve_in_class) {
                Verdict::FourColorable(c) => {
                    for (i, &v) in map.iter().enumerate() {
                        colors[v] = c.color(i);
                    }
                }
                other => return other,
            }
        }
        return Verdict::FourColorable(Coloring::new(colors, 4).expect("components coloured"));
    }

    let co_components = g.complement().components();
    if co_components.len() > 1 {
        ctx.note(|| format!("{} co-components", co_components.len()));
        set_route(ctx, Route::CoComponents);
        let mut colors = vec![0u8; n];
        let mut offset = 0u8;
        for comp in &co_components {
            let (sub, map) = g.induced(comp);
            ctx.stats.oracle_calls += 1;
            let Some(c) = small_chromatic_coloring(&sub, ctx.oracle) else {
                return Verdict::NotFourColorable;
            };
            if offset + c.palette() > 4 {
                return Verdict::NotFourColorable;
            }
            for (i, &v) in map.iter().enumerate() {
                colors[v] = offset + c.color(i);
            }
            offset += c.palette();
        }
        return Verdict::FourColorable(Coloring::new(colors, 4).expect("disjoint palettes fit"));
    }

    let mut chain: Vec<Reduction> = Vec::new();
    let mut current = g.clone();
    loop {
        let reduction = match reduce_with(&current, ctx.oracle) {
            Ok(ReduceOutcome::Reduced(r)) => r,
            Ok(ReduceOutcome::NotFourColorable { module }) => {
                ctx.note(|| format!("module {module:?} needs four colours"));
                set_route(ctx, Route::ModuleObstruction);
                return Verdict::NotFourColorable;
            }
            Err(e) => return Verdict::violation("reduction", e.to_string()),
        };
        if reduction.records.is_empty() {
            break;
        }
        ctx.stats.reductions += 1;
        ctx.note(|| {
            format!(
                "replaced {} modules, {} -> {} vertices",
                reduction.records.len(),
                reduction.parent_order,
                reduction.graph.order()
            )
        });
        current = reduction.graph.clone();
        chain.push(reduction);
        if is_quasi_prime(&current) {
            break;
        }
        ctx.note(|| "reduced graph is not quasi-prime, reducing again".into());
    }
    if ctx.options.paranoid && !chain.is_empty() {
        if let Some(w) = is_in_class(&current) {
            return Verdict::violation(
                "reduction-class",
                format!("reduced graph contains an induced {}", w.pattern.name()),
            );
        }
    }

    let mut verdict = solve_reduced(&current, ctx);
    for reduction in chain.iter().rev() {
        verdict = match verdict {
            Verdict::FourColorable(c) => match lift_coloring(&c, reduction) {
                Ok(lifted) => Verdict::FourColorable(lifted),
                Err(e) => Verdict::violation("lift", e.to_string()),
            },
            other => other,
        };
    }
    verdict
}

/// Connected, co-connected, quasi-prime.
fn solve_reduced(g: &Graph, ctx: &mut Context<'_>) -> Verdict {
    for obstruction in [Pattern::K5, Pattern::DoubleWheel] {
        if find_induced(g, obstruction).is_some() {
            ctx.note(|| format!("induced {} found", obstruction.name()));
            set_route(ctx, Route::Obstruction(obstruction));
            return Verdict::NotFourColorable;
        }
    }

    // F1..F6 are only magnets once F0 is absent
    for pattern in Pattern::MAGNETS {
        let Some(embedding) = find_induced(g, pattern) else { continue };
        ctx.note(|| format!("magnet {} at {:?}", pattern.name(), embedding.vertices()));
        set_route(ctx, Route::Magnet(pattern));
        return precolor_magnet(g, &embedding.image(g), pattern.name(), ctx);
    }

    if let Some(gem) = find_induced(g, Pattern::Gem) {
        let anchor = gem.image(g);
        if is_magnet(g, &anchor) {
            ctx.note(|| format!("gem {:?} is itself a magnet", gem.vertices()));
            set_route(ctx, Route::GemMagnet);
            return precolor_magnet(g, &anchor, "gem", ctx);
        }
        set_route(ctx, Route::Gem);
        ctx.note(|| format!("gem at {:?}", gem.vertices()));
        let p = match build_partition(g, &gem) {
            Ok(p) => p,
            Err(e) => return Verdict::violation("partition", e.to_string()),
        };
        let failed = verify_partition(g, &p);
        ctx.stats.partitions_checked += 1;
        if !failed.is_empty() {
            return Verdict::InvariantViolation(
                failed
                    .into_iter()
                    .map(|item| Violation::new(format!("partition/{}", item.id()), "fails on this input"))
                    .collect(),
            );
        }
        ctx.note(|| {
            format!("|X| = {}, |W| = {}, |Z1| = {}, |Z0| = {}", p.x.len(), p.w.len(), p.z1.len(), p.z0.len())
        });
        return peel_and_extend(g, &p, ctx, &mut |h, ctx| descend(h, ctx, solve));
    }

    ctx.stats.oracle_calls += 1;
    let v = decide_gemfree_with(g, 4, ctx.oracle);
    let route = match v.route {
        GemFreeRoute::Perfect => Route::GemFreePerfect,
        GemFreeRoute::ContainsC5 => Route::GemFreeC5,
    };
    ctx.note(|| format!("gem-free, {}", route.name()));
    set_route(ctx, route);
    match v.coloring {
        Some(c) => Verdict::FourColorable(c),
        // a perfect graph without K5 has chromatic number at most four
        None if v.route == GemFreeRoute::Perfect => {
            Verdict::violation("perfect-route", "perfect graph without K5 reported not 4-colourable")
        }
        None => Verdict::NotFourColorable,
    }
}

fn precolor_magnet(g: &Graph, f: &crate::graph::VertexSet, name: &str, ctx: &mut Context<'_>) -> Verdict {
    match magnet_color(g, f) {
        Ok(r) => {
            ctx.stats.precolorings += r.trials;
            ctx.stats.two_sat_calls += r.trials;
            match r.coloring {
                Some(c) => Verdict::FourColorable(c),
                None => Verdict::NotFourColorable,
            }
        }
        Err(e) => Verdict::violation(format!("magnet/{name}"), e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::listcolor::exact_k_color;
    use crate::outcome::Status;

    fn check(g: &Graph) -> Outcome {
        let out = decide4(g);
        let expected = exact_k_color(g, 4).is_some();
        match &out.verdict {
            Verdict::FourColorable(c) => {
                assert!(expected);
                assert!(verify_coloring(g, c).unwrap());
            }
            Verdict::NotFourColorable => assert!(!expected),
            other => panic!("unexpected {other:?} on {g:?}"),
        }
        out
    }

    #[test]
    fn basic_examples() {
        assert_eq!(decide4(&Graph::complete(5)).status(), Status::NotFourColorable);
        assert_eq!(decide4(&Graph::complete(4)).status(), Status::FourColorable);
        assert_eq!(decide4(&Graph::empty(0)).status(), Status::FourColorable);
        let c5 = check(&Graph::cycle(5));
        assert_eq!(c5.stats.route, Some(Route::GemFreeC5));
        assert_eq!(decide4(&Pattern::DoubleWheel.graph()).status(), Status::NotFourColorable);
        assert_eq!(decide4(&Graph::path(6)).status(), Status::OutOfClass);
        assert_eq!(decide4(&Pattern::Bull.graph()).status(), Status::OutOfClass);
    }

    #[test]
    fn catalogue_graphs() {
        for p in Pattern::ALL {
            let g = p.graph();
            if is_in_class(&g).is_none() {
                check(&g);
            }
        }
    }

    #[test]
    fn trace_records_route() {
        let (out, trace) = decide4_with_trace(&Graph::complete(5));
        assert_eq!(out.status(), Status::NotFourColorable);
        // every vertex of K5 is universal, so the co-component split settles it
        assert!(trace.iter().any(|e| e.message.contains("co-components")));
        assert_eq!(out.stats.route, Some(Route::CoComponents));

        let (_, trace) = decide4_with_trace(&Graph::cycle(5));
        assert!(trace.iter().any(|e| e.message.contains("gemfree_c5")));
    }

    #[test]
    fn all_graphs_on_six_vertices() {
        let n = 6;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(i, _)| mask & 1 << i != 0).map(|(_, &e)| e).collect();
            let g = Graph::new(n, &edges).unwrap();
            if is_in_class(&g).is_none() {
                check(&g);
            }
        }
    }
}
