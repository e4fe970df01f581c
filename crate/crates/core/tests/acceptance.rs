//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.
//!
//! Every comparison below is exact; the only tolerances are wall-clock budgets.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use amalgam_zdg::{
    parse_ideal, parse_ring, sweep, AmalgamRing, Diameter, Distance, Girth, IdealFilter, ZdGraph,
};
use common::*;

/// Budget for each single-instance golden.
const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
/// Single-threaded budget for the full sweep.
const SWEEP_BUDGET: Duration = Duration::from_secs(300);
/// Oracle size limits.
const DIAMETER_ORACLE_MAX_VERTICES: usize = 50;
const GIRTH_ORACLE_MAX_VERTICES: usize = 12;
const IDEAL_ORACLE_MAX_ORDER: usize = 8;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn diam(g: &ZdGraph) -> Diameter {
    g.diameter().expect("zero-divisor graphs are connected")
}

fn duplicate(ring: &str, ideal: &str) -> (amalgam_zdg::FiniteRing, AmalgamRing) {
    let r = parse_ring(ring).unwrap();
    let i = parse_ideal(&r, ideal).unwrap();
    let a = AmalgamRing::amalgamated_duplication(&r, &i).unwrap();
    (r, a)
}

fn diameters(ring: &str, ideal: &str, base: usize, dup: usize) -> Result<(), String> {
    let (r, a) = duplicate(ring, ideal);
    let (db, da) = (diam(&ZdGraph::build(&r)), diam(&ZdGraph::build(a.ring())));
    ensure(
        db == Diameter::Finite(base) && da == Diameter::Finite(dup),
        format!("{ring} I={ideal}: diam Γ(R) = {db}, diam Γ(R⋈I) = {da}, want {base} and {dup}"),
    )
}

fn criterion_1() -> Check {
    diameters("Z2xZ2", "gen((1,0))", 1, 3)?;
    Ok("Z2xZ2, I = Z2x0: diam 1 and 3".into())
}

fn criterion_2() -> Check {
    diameters("Z6", "gen(3)", 2, 3)?;
    let (_, a) = duplicate("Z6", "gen(3)");
    let g = ZdGraph::build(a.ring());
    let x = a.element_by_labels("1", "3").unwrap();
    let y = a.element_by_labels("3", "0").unwrap();
    let d = g.distance(x, y).map_err(|e| e.to_string())?;
    ensure(d == Distance::Finite(3), format!("d((1,3),(3,0)) = {d:?}"))?;
    Ok("Z6, I = {0,3}: diam 2 and 3, d((1,3),(3,0)) = 3".into())
}

fn criterion_3() -> Check {
    diameters("Z8", "gen(4)", 2, 2)?;
    let (_, a) = duplicate("Z8", "gen(4)");
    let d = a.ring();
    let mut zd = d.zero_divisors();
    zd.remove(d.zero().index());
    let got: BTreeSet<String> = d.set_labels(&zd).into_iter().collect();
    let want: BTreeSet<String> = ["(0,4)", "(4,4)", "(6,0)", "(2,0)", "(4,0)", "(2,4)", "(6,4)"]
        .into_iter()
        .map(String::from)
        .collect();
    ensure(got == want, format!("Z(R⋈I)∖0 = {got:?}"))?;
    Ok("Z8, I = {0,4}: 7 listed zero divisors, diam 2 and 2".into())
}

fn criterion_4() -> Check {
    for ring in ["Z2xZ3", "Z2xZ5"] {
        let (r, a) = duplicate(ring, "gen((1,0))");
        let base = ZdGraph::build(&r);
        ensure(base.is_star(), format!("Γ({ring}) is not a star"))?;
        let da = diam(&ZdGraph::build(a.ring()));
        ensure(da == Diameter::Finite(3), format!("{ring}: diam Γ(R⋈I) = {da}"))?;
    }
    Ok("Z2xF for F = Z3, Z5: star, diam Γ(R⋈I) = 3".into())
}

fn criterion_5() -> Check {
    for ring in ["Z4", "Z9"] {
        let (r, a) = duplicate(ring, "full");
        let zd = r.zero_divisors();
        ensure(r.zset_square_zero(), format!("{ring}: Z(R)² ≠ 0"))?;
        ensure(!a.ideal().members().is_subset(&zd), format!("{ring}: I ⊆ Z(R)"))?;
        ensure(!a.ring().zset_square_zero(), format!("{ring}: Z(R⋈I)² = 0"))?;
    }
    Ok("R = I = Z4, Z9: Z(R)² = 0, I ⊄ Z(R), Z(R⋈I)² ≠ 0".into())
}

fn criterion_6() -> Check {
    let family = sweep_family();
    let t = Instant::now();
    let report = sweep(&family, IdealFilter::Nonzero, Some(1)).map_err(|e| e.to_string())?;
    let took = t.elapsed();
    let bad: Vec<String> = report
        .counterexamples_list()
        .into_iter()
        .map(|(r, i, t)| format!("{t} at {r} I={{{}}}", i.join(",")))
        .collect();
    let summary = format!(
        "{} rings, {} instances, {} counterexamples {:?}, {} invariant violations, {:.1} s",
        family.len(),
        report.instances.len(),
        bad.len(),
        bad,
        report.invariant_violations.len(),
        took.as_secs_f64()
    );
    ensure(report.success() && took < SWEEP_BUDGET, summary.clone())?;
    Ok(summary)
}

fn criterion_7() -> Check {
    let mut rings = 0;
    for r in small_rings().iter().filter(|r| r.order() <= IDEAL_ORACLE_MAX_ORDER) {
        let ours: BTreeSet<Vec<usize>> = r.all_ideals().iter().map(|i| i.members().to_vec()).collect();
        ensure(ours == brute_force_ideals(r), format!("ideals of {} disagree", r.spec_name()))?;
        rings += 1;
    }
    let (mut dgraphs, mut ggraphs) = (0, 0);
    for (name, g) in sweep_graphs() {
        if g.vertex_count() <= DIAMETER_ORACLE_MAX_VERTICES {
            ensure(g.diameter().ok() == floyd_warshall_diameter(&g), format!("diameter of Γ({name})"))?;
            dgraphs += 1;
        }
        if g.vertex_count() <= GIRTH_ORACLE_MAX_VERTICES {
            let want = enumerated_girth(&g).map_or(Girth::Infinite, Girth::Finite);
            ensure(g.girth() == want, format!("girth of Γ({name})"))?;
            ggraphs += 1;
        }
    }
    Ok(format!("ideals on {rings} rings, diameter on {dgraphs} graphs, girth on {ggraphs} graphs"))
}

fn criterion_8() -> Check {
    let mut checked = 0;
    for spec in sweep_family() {
        let r = parse_ring(&spec).unwrap();
        for i in r.all_ideals().into_iter().filter(|i| i.len() >= 2) {
            let a = AmalgamRing::amalgamated_duplication(&r, &i).unwrap();
            let rep = a.check_remark_2_3();
            ensure(
                !rep.vacuous && rep.bipartite_core && rep.base_embedding,
                format!("{spec} I={}: {:?}", r.format_set(i.members()), rep.witness),
            )?;
            checked += 1;
        }
    }
    Ok(format!("K_{{|I|-1,|I|-1}} core and x ↦ (x,0) embedding on {checked} instances"))
}

fn criterion_9() -> Check {
    let family = sweep_family();
    let one = sweep(&family, IdealFilter::Nonzero, Some(1)).and_then(|r| r.to_json());
    let many = sweep(&family, IdealFilter::Nonzero, Some(4)).and_then(|r| r.to_json());
    let again = sweep(&family, IdealFilter::Nonzero, Some(1)).and_then(|r| r.to_json());
    let (one, many, again) = (one.unwrap(), many.unwrap(), again.unwrap());
    ensure(one == many && one == again, "sweep JSON differs between runs")?;
    Ok(format!("3 runs (1, 4, 1 workers), {} identical bytes", one.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 two-factor diameter jump", criterion_1, Some(GOLDEN_BUDGET)),
        ("2 Z6 diameter and distance", criterion_2, Some(GOLDEN_BUDGET)),
        ("3 Z8 zero divisors", criterion_3, Some(GOLDEN_BUDGET)),
        ("4 star base graphs", criterion_4, Some(GOLDEN_BUDGET)),
        ("5 square-zero transfer fails", criterion_5, Some(GOLDEN_BUDGET)),
        ("6 exhaustive sweep", criterion_6, None),
        ("7 oracle equivalence", criterion_7, None),
        ("8 bipartite core structure", criterion_8, None),
        ("9 deterministic report", criterion_9, None),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let t = Instant::now();
        let mut result = run();
        let took = t.elapsed();
        if let (Ok(msg), Some(b)) = (&result, budget) {
            if took >= b {
                result = Err(format!("{msg}; took {:.3} s, budget {:.3} s", took.as_secs_f64(), b.as_secs_f64()));
            }
        }
        match result {
            Ok(msg) => println!("PASS criterion {name}: {msg} [{:.3} s]", took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} [{:.3} s]", took.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
