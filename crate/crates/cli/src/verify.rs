use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use qtree::invariant::{check_reroot, q_poly_block, BlockSpec};
use qtree::presimplicial::{
    check_identities_bounded, enumerate_top_trees_bounded, q_boundary_at, reduce_to_point, QChain,
};
use qtree::qpoly::{q_binomial, q_factorial};
use qtree::tree::{enumerate_plane_trees_bounded, random_plane_tree};
use qtree::{q_poly, q_poly_delayed, q_poly_state, PlaneTree};

use crate::{Caps, Failure, Family, Format, Outcome};

/// One family's tally.
struct Tally {
    lines: Vec<(String, usize, usize)>,
    examples: Vec<String>,
    extra: Vec<String>,
    ok: bool,
}

impl Tally {
    fn new() -> Self {
        Tally {
            lines: Vec::new(),
            examples: Vec::new(),
            extra: Vec::new(),
            ok: true,
        }
    }

    fn record(&mut self, what: impl Into<String>, checked: usize, failures: Vec<String>) {
        if !failures.is_empty() {
            self.ok = false;
        }
        self.lines.push((what.into(), checked, failures.len()));
        self.examples.extend(failures.into_iter().take(5));
    }
}

fn default_size(family: Family) -> usize {
    match family {
        Family::Wedge | Family::State | Family::Reroot => 8,
        Family::Block => 9,
        Family::Presimplicial => 7,
    }
}

fn cap_for(family: Family, caps: Caps) -> usize {
    match family {
        Family::Presimplicial => caps.top_leaves,
        _ => caps.plane_edges,
    }
}

fn trees_up_to(max: usize, limit: usize) -> qtree::Result<Vec<PlaneTree>> {
    let mut all = Vec::new();
    for n in 0..=max {
        all.extend(enumerate_plane_trees_bounded(n, limit)?);
    }
    Ok(all)
}

fn wedge(max: usize, limit: usize, tally: &mut Tally) -> qtree::Result<()> {
    let by_size: Vec<Vec<PlaneTree>> = (0..=max)
        .map(|n| enumerate_plane_trees_bounded(n, limit))
        .collect::<qtree::Result<_>>()?;
    let mut checked = 0;
    let mut bad = Vec::new();
    for a_edges in 0..=max {
        for b_edges in 0..=max - a_edges {
            let binom = q_binomial(a_edges + b_edges, b_edges as i64);
            for a in &by_size[a_edges] {
                let qa = &binom * &q_poly(a);
                for b in &by_size[b_edges] {
                    checked += 1;
                    let w = PlaneTree::wedge(&[a.clone(), b.clone()])?;
                    if q_poly(&w) != &qa * &q_poly(b) {
                        bad.push(format!("{a} v {b}"));
                    }
                }
            }
        }
    }
    tally.record("pairs", checked, bad);
    Ok(())
}

fn state(
    max: usize,
    limit: usize,
    seed: u64,
    samples: usize,
    tally: &mut Tally,
) -> qtree::Result<()> {
    let all = trees_up_to(max, limit)?;
    let bad = all
        .iter()
        .filter(|t| q_poly(t) != q_poly_state(t))
        .map(ToString::to_string)
        .collect();
    tally.record("trees", all.len(), bad);

    let edges = 2 * max;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let t = random_plane_tree(edges, &mut rng);
        if q_poly(&t) != q_poly_state(&t) {
            bad.push(t.to_string());
        }
    }
    tally.record(format!("random trees with {edges} edges"), samples, bad);
    Ok(())
}

fn reroot(max: usize, limit: usize, tally: &mut Tally) -> qtree::Result<()> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for t in trees_up_to(max, limit)? {
        for v in t.vertices() {
            if v.is_root() {
                continue;
            }
            checked += 1;
            if !check_reroot(&t, &v)?.holds {
                bad.push(format!("{t} at edge {v}"));
            }
        }
    }
    tally.record("edges", checked, bad);
    Ok(())
}

fn block(max: usize, seed: u64, samples: usize, tally: &mut Tally) -> qtree::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for _ in 0..samples {
        let spec = BlockSpec::sample(&mut rng, max.max(1));
        let assembled = spec.assemble()?;
        if q_poly_block(&spec)? != q_poly_delayed(&assembled) {
            bad.push(assembled.to_string());
        }
    }
    tally.record("block specs", samples, bad);
    Ok(())
}

fn presimplicial(max: usize, limit: usize, tally: &mut Tally) -> qtree::Result<()> {
    let report = check_identities_bounded(max, limit)?;
    for c in &report.counts {
        let bad = report
            .violations
            .iter()
            .filter(|v| v.relation == c.relation)
            .map(|v| {
                format!(
                    "{} at {} {:?}: {} != {}",
                    v.relation, v.tree, v.indices, v.lhs, v.rhs
                )
            })
            .collect();
        tally.record(format!("instances of {}", c.relation), c.checked, bad);
    }

    let mut reductions = 0;
    let mut bad_reduce = Vec::new();
    let mut squares = 0;
    let mut bad_square = Vec::new();
    for n in 1..=max {
        for t in enumerate_top_trees_bounded(n, limit)? {
            reductions += 1;
            if reduce_to_point(&t) != q_factorial(n) {
                bad_reduce.push(t.to_string());
            }
            if n >= 3 {
                squares += 1;
                let once = q_boundary_at(&QChain::basis(t.clone()), -1);
                if !once.boundary_at(-1).is_zero() {
                    bad_square.push(t.to_string());
                }
            }
        }
    }
    tally.record("reductions to [n]_q! point", reductions, bad_reduce);
    tally.record("double boundaries at q = -1", squares, bad_square);

    match &report.witness {
        Some(w) => tally.extra.push(format!(
            "s_i s_i != s_(i+1) s_i: {} failing pairs; e.g. T={} i={}: {} != {}",
            report.simplicial_failures, w.tree, w.index, w.lhs, w.rhs
        )),
        None => {
            tally.ok = false;
            tally
                .extra
                .push("no pair with s_i s_i != s_(i+1) s_i was found".into());
        }
    }
    Ok(())
}

pub fn run(
    family: Family,
    max_size: Option<usize>,
    seed: u64,
    samples: Option<usize>,
    format: Format,
    caps: Caps,
) -> Outcome {
    let limit = cap_for(family, caps);
    let max = max_size.unwrap_or_else(|| default_size(family).min(limit));
    if max > limit {
        return Err(qtree::Error::BoundExceeded {
            requested: max,
            limit,
        }
        .into());
    }
    let mut tally = Tally::new();
    match family {
        Family::Wedge => wedge(max, limit, &mut tally)?,
        Family::State => state(max, limit, seed, samples.unwrap_or(200), &mut tally)?,
        Family::Reroot => reroot(max, limit, &mut tally)?,
        Family::Block => block(max, seed, samples.unwrap_or(500), &mut tally)?,
        Family::Presimplicial => presimplicial(max, limit, &mut tally)?,
    }

    match format {
        Format::Json => {
            let checks: Vec<Value> = tally
                .lines
                .iter()
                .map(|(what, n, v)| json!({ "what": what, "checked": n, "violations": v }))
                .collect();
            out!(
                "{}",
                json!({
                    "family": format!("{family:?}").to_lowercase(),
                    "max_size": max,
                    "seed": seed,
                    "checks": checks,
                    "failures": tally.examples,
                    "notes": tally.extra,
                    "ok": tally.ok,
                })
            );
        }
        Format::Plain | Format::Latex => {
            for (what, n, v) in &tally.lines {
                out!("checked {n} {what}, {v} violations");
            }
            for note in &tally.extra {
                out!("{note}");
            }
            for e in &tally.examples {
                eprintln!("violation: {e}");
            }
        }
    }
    if tally.ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
