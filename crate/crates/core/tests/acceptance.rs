//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use quasiline_core::forbidden::{build_pattern, corollary2_check, find_induced, PatternId};
use quasiline_core::graph::{Graph, VertexSet};
use quasiline_core::oracle::{
    brute_find_odd_antihole, brute_two_clique_cover, enumerate_graphs, line_graph, random_graph,
    GraphStream,
};
use quasiline_core::recognition::*;

const RANDOM_SEED: u64 = 20_240_601;
const PERF_SEED: u64 = 7;

/// Certificates that failed their verifier, summed over every suite.
static UNSOUND: AtomicUsize = AtomicUsize::new(0);
static CHECKED: AtomicUsize = AtomicUsize::new(0);

fn audit(ok: bool) {
    CHECKED.fetch_add(1, Ordering::Relaxed);
    if !ok {
        UNSOUND.fetch_add(1, Ordering::Relaxed);
    }
}

fn audit_cover(g: &Graph, out: &CoverOutcome) {
    audit(match out {
        CoverOutcome::Cover(c) => verify_two_clique_cover(g, c).unwrap_or(false),
        CoverOutcome::Antihole(w) => verify_antihole(g, w).unwrap_or(false),
    });
}

fn audit_quasi_line(g: &Graph, out: &QuasiLineOutcome) {
    audit(match out {
        QuasiLineOutcome::Certificate(c) => verify_quasi_line_certificate(g, c).unwrap_or(false),
        QuasiLineOutcome::Obstruction(o) => verify_obstruction(g, o).unwrap_or(false),
    });
}

type Outcome = Result<String, String>;

fn within(label: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{label} took {elapsed:.2?}, limit {limit:?}"))
    }
}

fn exhaustive_six() -> Vec<Graph> {
    enumerate_graphs(6).unwrap().collect()
}

fn random_corpus() -> Vec<Graph> {
    GraphStream::random(100_000, (7, 12), &[0.2, 0.5, 0.8], RANDOM_SEED)
        .unwrap()
        .collect()
}

/// `two_clique_cover`, the brute cover search and the brute antihole search
/// must give the same verdict.
fn three_way_mismatch(g: &Graph) -> bool {
    let fast = two_clique_cover(g);
    audit_cover(g, &fast);
    let cover = brute_two_clique_cover(g).unwrap();
    let hole = brute_find_odd_antihole(g).unwrap();
    if let Some(c) = &cover {
        audit(verify_two_clique_cover(g, c).unwrap_or(false));
    }
    if let Some(w) = &hole {
        audit(verify_antihole(g, w).unwrap_or(false));
    }
    !(fast.is_cover() == cover.is_some() && cover.is_some() == hole.is_none())
}

fn ac1_cover_exhaustive() -> Outcome {
    let start = Instant::now();
    let graphs = exhaustive_six();
    if graphs.len() != 32_768 {
        return Err(format!("expected 32768 graphs, got {}", graphs.len()));
    }
    let mismatches = graphs.iter().filter(|g| three_way_mismatch(g)).count();
    let t = start.elapsed();
    within("exhaustive n=6", t, Duration::from_secs(30))?;
    if mismatches > 0 {
        return Err(format!("{mismatches} mismatches"));
    }
    Ok(format!("32768 graphs, 0 mismatches, {t:.2?}"))
}

fn ac2_cover_random(corpus: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mismatches = corpus.par_iter().filter(|g| three_way_mismatch(g)).count();
    let t = start.elapsed();
    within("random corpus", t, Duration::from_secs(120))?;
    if mismatches > 0 {
        return Err(format!("{mismatches} mismatches"));
    }
    Ok(format!("{} graphs, 0 mismatches, {t:.2?}", corpus.len()))
}

/// Quasi-line verdict against brute covers of every neighbourhood; an
/// obstruction must name the first failing vertex.
fn quasi_line_mismatch(g: &Graph) -> bool {
    let out = quasi_line(g);
    audit_quasi_line(g, &out);
    let first_bad = (0..g.n()).find(|&v| {
        let nb: VertexSet = g.neighbors(v).collect();
        let (h, _) = g.induced_subgraph(&nb).unwrap();
        brute_two_clique_cover(&h).unwrap().is_none()
    });
    match (&out, first_bad) {
        (QuasiLineOutcome::Certificate(_), None) => false,
        (QuasiLineOutcome::Obstruction(o), Some(v)) => o.apex != v,
        _ => true,
    }
}

fn ac3_quasi_line(six: &[Graph], corpus: &[Graph]) -> Outcome {
    let start = Instant::now();
    let m1 = six.par_iter().filter(|g| quasi_line_mismatch(g)).count();
    let m2 = corpus.par_iter().filter(|g| quasi_line_mismatch(g)).count();
    if m1 + m2 > 0 {
        return Err(format!("{m1} exhaustive and {m2} random mismatches"));
    }
    Ok(format!(
        "{} graphs, 0 mismatches, {:.2?}",
        six.len() + corpus.len(),
        start.elapsed()
    ))
}

fn ac4_soundness() -> Outcome {
    let (bad, total) = (UNSOUND.load(Ordering::Relaxed), CHECKED.load(Ordering::Relaxed));
    if bad > 0 {
        return Err(format!("{bad} of {total} certificates rejected"));
    }
    if total == 0 {
        return Err("no certificates were audited".into());
    }
    Ok(format!("{total} certificates, all verified"))
}

fn ac5_pattern_free(six: &[Graph]) -> Outcome {
    let implied = AtomicUsize::new(0);
    let violations = six
        .par_iter()
        .filter(|g| {
            if !corollary2_check(g).implied_quasi_line {
                return false;
            }
            implied.fetch_add(1, Ordering::Relaxed);
            let out = quasi_line(g);
            audit_quasi_line(g, &out);
            !out.is_quasi_line()
        })
        .count();
    if violations > 0 {
        return Err(format!("{violations} violations"));
    }
    Ok(format!(
        "{} pattern-free graphs, all certified quasi-line",
        implied.into_inner()
    ))
}

fn ac6_antiholes() -> Outcome {
    let start = Instant::now();
    for k in [5, 7, 9, 11, 13] {
        let g = build_pattern(&PatternId::Antihole(k)).map_err(|e| e.to_string())?;
        let out = quasi_line(&g);
        audit_quasi_line(&g, &out);
        let QuasiLineOutcome::Certificate(cert) = out else {
            return Err(format!("antihole({k}) rejected"));
        };
        if !verify_quasi_line_certificate(&g, &cert).unwrap_or(false) {
            return Err(format!("antihole({k}) certificate does not verify"));
        }
    }
    let t = start.elapsed();
    within("antiholes", t, Duration::from_secs(1))?;
    Ok(format!("k = 5, 7, 9, 11, 13 certified, {t:.2?}"))
}

fn ac7_cor2_pattern() -> Outcome {
    let start = Instant::now();
    let g = build_pattern(&PatternId::Corollary2).map_err(|e| e.to_string())?;
    let out = quasi_line(&g);
    audit_quasi_line(&g, &out);
    if !out.is_quasi_line() {
        return Err("cor2 pattern rejected as quasi-line".into());
    }
    if find_induced(&g, &g).is_none() {
        return Err("cor2 pattern not found in itself".into());
    }
    let t = start.elapsed();
    within("self-containment", t, Duration::from_secs(1))?;
    Ok(format!("quasi-line and contains itself, {t:.2?}"))
}

fn ac8_lemma1() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0usize;
    let mut graphs = 0usize;
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap() {
            if g.edge_count() == n * n.saturating_sub(1) / 2 || check_3k1_c5_free(&g).is_some() {
                continue;
            }
            graphs += 1;
            for v in 0..n {
                for w in v + 1..n {
                    if g.has_edge(v, w) {
                        continue;
                    }
                    for (a, b) in [(v, w), (w, v)] {
                        let p = lemma1_partition(&g, a, b)
                            .map_err(|e| format!("{g:?} ({a},{b}): {e}"))?;
                        p.check(&g).map_err(|e| format!("{g:?} ({a},{b}): {e}"))?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    let t = start.elapsed();
    within("lemma sweep", t, Duration::from_secs(120))?;
    Ok(format!("{graphs} graphs, {pairs} ordered pairs, 0 violations, {t:.2?}"))
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
    v
}

fn ac9_extend_cover() -> Outcome {
    let start = Instant::now();
    let graphs: Vec<(u64, Graph)> = GraphStream::random(
        10_000,
        (1, 30),
        &[0.2, 0.5, 0.8, 0.9, 0.95],
        RANDOM_SEED + 9,
    )
    .unwrap()
    .enumerate()
    .map(|(i, g)| (i as u64, g))
    .collect();
    let coverable = AtomicUsize::new(0);
    let mismatches = graphs
        .par_iter()
        .map(|(i, g)| {
            let expected = two_clique_cover(g).is_cover();
            if expected {
                coverable.fetch_add(1, Ordering::Relaxed);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED ^ i);
            (0..5)
                .filter(|_| {
                    let order = shuffled(g.n(), &mut rng);
                    let out = incremental_two_clique_cover(g, &order).unwrap();
                    audit_cover(g, &out);
                    out.is_cover() != expected
                })
                .count()
        })
        .sum::<usize>();
    let t = start.elapsed();
    within("incremental sweep", t, Duration::from_secs(120))?;
    if mismatches > 0 {
        return Err(format!("{mismatches} mismatched insertion orders"));
    }
    Ok(format!(
        "10000 graphs ({} coverable) x 5 orders, 0 mismatches, {t:.2?}",
        coverable.into_inner()
    ))
}

fn ac10_minimality() -> Outcome {
    let start = Instant::now();
    let check = |g: &Graph| -> bool {
        match two_clique_cover(g) {
            CoverOutcome::Cover(_) => false,
            CoverOutcome::Antihole(w) => {
                let brute = brute_find_odd_antihole(g).unwrap().expect("non-coverable");
                w.len() != brute.len()
            }
        }
    };
    let mut mismatches = 0;
    let mut total = 0;
    for n in 0..=7 {
        let graphs: Vec<Graph> = enumerate_graphs(n).unwrap().collect();
        total += graphs.len();
        mismatches += graphs.par_iter().filter(|g| check(g)).count();
    }
    let sample: Vec<Graph> = GraphStream::random(10_000, (8, 8), &[0.3, 0.5, 0.7, 0.85], RANDOM_SEED + 10)
        .unwrap()
        .collect();
    total += sample.len();
    mismatches += sample.par_iter().filter(|g| check(g)).count();
    if mismatches > 0 {
        return Err(format!("{mismatches} non-minimal witnesses"));
    }
    Ok(format!(
        "{total} graphs (all n <= 7, 10^4 sampled at n = 8), 0 mismatches, {:.2?}",
        start.elapsed()
    ))
}

fn ac11_performance() -> Outcome {
    let g = random_graph(1000, 0.5, PERF_SEED).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let out = two_clique_cover(&g);
    let t1 = start.elapsed();
    audit_cover(&g, &out);
    within("two_clique_cover(n=1000)", t1, Duration::from_secs(2))?;

    let base = random_graph(100, 0.06, PERF_SEED).map_err(|e| e.to_string())?;
    let l = line_graph(&base);
    let start = Instant::now();
    let out = quasi_line(&l);
    let t2 = start.elapsed();
    audit_quasi_line(&l, &out);
    within("quasi_line(line graph)", t2, Duration::from_secs(2))?;
    if !out.is_quasi_line() {
        return Err("line graph rejected".into());
    }
    Ok(format!(
        "two_clique_cover n=1000: {t1:.2?}; quasi_line on {}-vertex line graph: {t2:.2?}",
        l.n()
    ))
}

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() -> ExitCode {
    let six = exhaustive_six();
    let corpus = random_corpus();

    // soundness is aggregated over all other suites, so it runs last
    let criteria: Vec<(&str, Criterion)> = vec![
        ("AC1 two-clique equivalence, exhaustive n=6", Box::new(ac1_cover_exhaustive)),
        ("AC2 two-clique equivalence, 10^5 random n=7..12", Box::new(|| ac2_cover_random(&corpus))),
        ("AC3 quasi-line equivalence", Box::new(|| ac3_quasi_line(&six, &corpus))),
        ("AC5 pattern-free graphs are quasi-line", Box::new(|| ac5_pattern_free(&six))),
        ("AC6 odd antiholes are quasi-line", Box::new(ac6_antiholes)),
        ("AC7 cor2 pattern is quasi-line", Box::new(ac7_cor2_pattern)),
        ("AC8 lemma1 partition", Box::new(ac8_lemma1)),
        ("AC9 incremental cover consistency", Box::new(ac9_extend_cover)),
        ("AC10 witness minimality", Box::new(ac10_minimality)),
        ("AC11 performance smoke", Box::new(ac11_performance)),
        ("AC4 certificate soundness", Box::new(ac4_soundness)),
    ];

    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
