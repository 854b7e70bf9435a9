//! Acceptance suite. Runs every criterion on its own thread, prints one
//! `[PASS]`/`[FAIL]` line per criterion in order, and exits nonzero if any
//! failed. Each criterion pins its tolerance and wall-clock limit below.

use std::process::ExitCode;
use std::thread;
use std::time::{Duration, Instant};

use exdef_core::blockgraph::blockgraph_chi;
use exdef_core::cactus::{
    cactus_chi2, cactus_label, cactus_label_with_order, cactus_preprocess, Palette,
};
use exdef_core::closed_form::{chi_complete, chi_cycle, chi_wheel};
use exdef_core::coloring::{chromatic_number, is_exact_coloring, Budget};
use exdef_core::graph::generate::{
    cartesian_k2_complete, categorical_k2_complete, complete, cycle, octahedron, petersen,
    tightness_gadget, wheel,
};
use exdef_core::graph::random::{gnp, random_block_graph, random_cactus, shuffled};
use exdef_core::oracle::{brute_chi, brute_solve, chi_via_quotients};
use exdef_core::reductions::{
    lift_solution, reduce_coloring_to_exact, reduce_increment_defect, reduce_nae3sat,
    reduce_planar_variant, NaeFormula, ReductionMap, SourceSolution, VariableCycle,
};
use exdef_core::{Graph, SolveOutcome};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        name: "cycle table",
        limit: secs(10),
        run: cycle_table,
    },
    Criterion {
        id: 2,
        name: "wheel table",
        limit: secs(30),
        run: wheel_table,
    },
    Criterion {
        id: 3,
        name: "complete graphs",
        limit: secs(60),
        run: complete_graphs,
    },
    Criterion {
        id: 4,
        name: "Petersen graph",
        limit: secs(300),
        run: petersen_extremal,
    },
    Criterion {
        id: 5,
        name: "quotient characterization",
        limit: secs(600),
        run: quotient_equivalence,
    },
    Criterion {
        id: 6,
        name: "product separations",
        limit: secs(600),
        run: product_separations,
    },
    Criterion {
        id: 7,
        name: "cactus algorithm",
        limit: secs(900),
        run: cactus_algorithm,
    },
    Criterion {
        id: 8,
        name: "block graphs",
        limit: secs(900),
        run: block_graphs,
    },
    Criterion {
        id: 9,
        name: "reductions round trip",
        limit: secs(1200),
        run: reductions_round_trip,
    },
    Criterion {
        id: 10,
        name: "tightness witness",
        limit: secs(10),
        run: tightness_witness,
    },
];

/// Slope bound for log(total runtime) against log(n) on large cacti.
const MAX_CACTUS_SLOPE: f64 = 2.0;

fn main() -> ExitCode {
    let results: Vec<(Outcome, Duration)> = thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|c| {
                s.spawn(move || {
                    let start = Instant::now();
                    let out = std::panic::catch_unwind(c.run)
                        .unwrap_or_else(|_| Err("panicked".to_owned()));
                    (out, start.elapsed())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread"))
            .collect()
    });
    let mut failed = 0;
    for (c, (out, took)) in CRITERIA.iter().zip(results) {
        let out = match out {
            Ok(_) if took > c.limit => Err(format!("took {took:.1?}, limit {:?}", c.limit)),
            other => other,
        };
        let (tag, detail) = match &out {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += out.is_err() as usize;
        println!(
            "[{tag}] AC{} {} ({:.2} s): {detail}",
            c.id,
            c.name,
            took.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn oracle(g: &Graph, d: usize) -> Result<Option<usize>, String> {
    brute_chi(g, d, g.n().max(1), &Budget::unlimited())
        .map(|o| o.chi())
        .map_err(|e| e.to_string())
}

/// Checks that a finite outcome carries a valid witness, returning its value.
fn checked(g: &Graph, d: usize, out: &SolveOutcome) -> Result<Option<usize>, String> {
    if let SolveOutcome::Finite { chi, witness } = out {
        ensure!(
            is_exact_coloring(g, witness, d),
            "witness is not an exact (k, {d})-coloring"
        );
        ensure!(
            witness.k() == *chi,
            "witness palette {} differs from chi {chi}",
            witness.k()
        );
    }
    Ok(out.chi())
}

fn show(x: Option<usize>) -> String {
    x.map_or("inf".to_owned(), |c| c.to_string())
}

fn cycle_table() -> Outcome {
    let mut checked_brute = 0;
    for n in 3..=20 {
        for d in [1, 2] {
            let expected = match (d, n % 4) {
                (2, _) => Some(1),
                (_, 0) => Some(2),
                (_, 2) => Some(3),
                _ => None,
            };
            let g = cycle(n).unwrap();
            let got = checked(&g, d, &chi_cycle(n, d).map_err(|e| e.to_string())?)?;
            ensure!(
                got == expected,
                "C{n}, d={d}: closed form {}, expected {}",
                show(got),
                show(expected)
            );
            if n <= 12 {
                let brute = oracle(&g, d)?;
                ensure!(
                    brute == expected,
                    "C{n}, d={d}: brute force {}",
                    show(brute)
                );
                checked_brute += 1;
            }
        }
    }
    Ok(format!(
        "36 cases exact, {checked_brute} confirmed by brute force"
    ))
}

fn wheel_table() -> Outcome {
    for n in 4..=16 {
        let expected = match n {
            4 => Some(2),
            _ if n % 2 == 0 => Some(3),
            _ => None,
        };
        let g = wheel(n).unwrap();
        let got = checked(&g, 1, &chi_wheel(n, 1).map_err(|e| e.to_string())?)?;
        ensure!(
            got == expected,
            "W{n}: closed form {}, expected {}",
            show(got),
            show(expected)
        );
        if n <= 10 {
            let brute = oracle(&g, 1)?;
            ensure!(brute == expected, "W{n}: brute force {}", show(brute));
        }
    }
    Ok("orders 4..=16 exact, 4..=10 confirmed by brute force".into())
}

fn complete_graphs() -> Outcome {
    for n in 1..=12 {
        for d in 0..=4 {
            let expected = (n % (d + 1) == 0).then(|| n / (d + 1));
            let g = complete(n).unwrap();
            let got = checked(&g, d, &chi_complete(n, d).map_err(|e| e.to_string())?)?;
            ensure!(
                got == expected,
                "K{n}, d={d}: closed form {}, expected {}",
                show(got),
                show(expected)
            );
            if n <= 8 {
                let brute = oracle(&g, d)?;
                ensure!(
                    brute == expected,
                    "K{n}, d={d}: brute force {}",
                    show(brute)
                );
            }
        }
    }
    Ok("n <= 12, d <= 4 exact; n <= 8 confirmed by brute force".into())
}

fn petersen_extremal() -> Outcome {
    let g = petersen();
    let delta = g.max_degree().unwrap();
    let brute = oracle(&g, 1)?;
    ensure!(
        brute == Some(2 * delta - 1),
        "brute force gives {}",
        show(brute)
    );
    let quotients = chi_via_quotients(&g, 1, &Budget::unlimited()).map_err(|e| e.to_string())?;
    ensure!(
        checked(&g, 1, &quotients)? == Some(5),
        "quotient route gives {}",
        show(quotients.chi())
    );
    Ok("chi_1 = 5 = 2*Delta - 1 by both routes".into())
}

fn quotient_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut finite, mut infinite) = (0, 0);
    for i in 0..200 {
        let n = rng.random_range(1..=9);
        let p = rng.random_range(0.3..=0.9);
        let g = gnp(n, p, 5000 + i);
        for d in [1, 2] {
            let brute = oracle(&g, d)?;
            let quotients =
                chi_via_quotients(&g, d, &Budget::unlimited()).map_err(|e| e.to_string())?;
            let q = checked(&g, d, &quotients)?;
            ensure!(
                brute == q,
                "gnp seed {}, d={d}: brute {} vs quotients {} on {:?}",
                5000 + i,
                show(brute),
                show(q),
                g.edges().collect::<Vec<_>>()
            );
            if q.is_some() {
                finite += 1;
            } else {
                infinite += 1;
            }
        }
    }
    Ok(format!(
        "400 comparisons agree ({finite} finite, {infinite} infeasible)"
    ))
}

fn product_separations() -> Outcome {
    let b = Budget::unlimited();
    for (d, r) in [(1, 2), (2, 2), (1, 3)] {
        let m = (d + 1) * r;
        let cart = cartesian_k2_complete(m).unwrap();
        let cat = categorical_k2_complete(m).unwrap();
        let chi_cart = chromatic_number(&cart, &b).map_err(|e| e.to_string())?.k();
        ensure!(chi_cart == m, "chi(K2 x K{m}) = {chi_cart}");
        let exact_cart = oracle(&cart, d)?;
        ensure!(
            exact_cart.is_some_and(|c| c <= r),
            "cartesian, d={d}: {}",
            show(exact_cart)
        );
        let chi_cat = chromatic_number(&cat, &b).map_err(|e| e.to_string())?.k();
        ensure!(chi_cat == 2, "chi of categorical K2 x K{m} = {chi_cat}");
        let exact_cat = oracle(&cat, d)?;
        ensure!(
            exact_cat == Some(r),
            "categorical, d={d}: {}",
            show(exact_cat)
        );
    }
    Ok("(d, r) in {(1,2), (2,2), (1,3)} separate as stated".into())
}

/// Monochromatic cycles joined into a cactus by bridges and by cycles whose
/// edges all join different colors, so an exact `(k, 2)`-coloring exists by
/// construction. Stops before exceeding `max_n` vertices.
fn planted_cactus(max_n: usize, k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    let mut color: Vec<usize> = Vec::new();
    let add_cycle =
        |edges: &mut Vec<(usize, usize)>, color: &mut Vec<usize>, len: usize, c: usize| {
            let base = color.len();
            color.extend(std::iter::repeat_n(c, len));
            edges.extend((0..len).map(|i| (base + i, base + (i + 1) % len)));
            base
        };
    let first = rng.random_range(3..=5).min(max_n);
    add_cycle(&mut edges, &mut color, first, rng.random_range(0..k));
    loop {
        let joins = if k == 2 {
            [1, 3]
        } else {
            [1, rng.random_range(2..=4)]
        };
        let fresh = joins[rng.random_range(0..2)];
        let lens: Vec<usize> = (0..fresh).map(|_| rng.random_range(3..=4)).collect();
        if color.len() + lens.iter().sum::<usize>() > max_n {
            break;
        }
        let anchor = rng.random_range(0..color.len());
        let mut ring = vec![anchor];
        for (i, &len) in lens.iter().enumerate() {
            let prev = color[*ring.last().unwrap()];
            let last = i + 1 == lens.len();
            let options: Vec<usize> = (0..k)
                .filter(|&c| c != prev && !(last && fresh > 1 && c == color[anchor]))
                .collect();
            let c = options[rng.random_range(0..options.len())];
            let base = add_cycle(&mut edges, &mut color, len, c);
            ring.push(base + rng.random_range(0..len));
        }
        if fresh == 1 {
            edges.push((ring[0], ring[1]));
        } else {
            edges.extend((0..ring.len()).map(|i| (ring[i], ring[(i + 1) % ring.len()])));
        }
    }
    Graph::new(color.len(), edges).expect("planted edges are in range")
}

fn random_small_cactus(i: u64, rng: &mut ChaCha8Rng) -> Graph {
    let g = match i % 3 {
        0 => random_cactus(
            rng.random_range(1..=14),
            rng.random_range(0.0..0.4),
            rng.random_range(3..=7),
            i,
        ),
        1 => planted_cactus(14, 2, rng),
        _ => planted_cactus(14, 3, rng),
    };
    shuffled(&g, i ^ 0x7a)
}

fn labeling_is_unique(g: &Graph, rng: &mut ChaCha8Rng) -> Result<bool, String> {
    let aux = cactus_preprocess(g).map_err(|e| e.to_string())?;
    let Ok(base) = cactus_label(&aux, Palette::Two) else {
        return Ok(false);
    };
    let mut order: Vec<usize> = (0..g.n()).collect();
    for _ in 0..5 {
        order.shuffle(rng);
        let other = cactus_label_with_order(&aux, Palette::Two, &order)
            .map_err(|r| format!("rejected under a permuted scan order: {r:?}"))?;
        ensure!(
            (&other.x, &other.cycles, &other.w) == (&base.x, &base.cycles, &base.w),
            "labeling depends on the scan order"
        );
    }
    Ok(true)
}

fn cactus_algorithm() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut accepted = 0;
    let mut finite_small = 0;
    for i in 0..300 {
        let g = random_small_cactus(i, &mut rng);
        let fast = cactus_chi2(&g).map_err(|e| e.to_string())?;
        let got = checked(&g, 2, &fast)?;
        let brute = oracle(&g, 2)?;
        ensure!(
            got == brute,
            "small cactus {i}: algorithm {} vs brute force {} on {:?}",
            show(got),
            show(brute),
            g.edges().collect::<Vec<_>>()
        );
        finite_small += got.is_some() as usize;
        accepted += labeling_is_unique(&g, &mut rng)? as usize;
    }

    let sizes = [250, 500, 1000, 2000];
    let mut points = Vec::new();
    let mut finite_large = 0;
    for (b, &n) in sizes.iter().enumerate() {
        let mut total = Duration::ZERO;
        for j in 0..250u64 {
            let seed = 10_000 * (b as u64 + 1) + j;
            let g = match j % 3 {
                0 => random_cactus(n, 0.2, 6, seed),
                1 => planted_cactus(n, 2, &mut rng),
                _ => planted_cactus(n, 3, &mut rng),
            };
            let g = shuffled(&g, seed);
            let start = Instant::now();
            let out = cactus_chi2(&g).map_err(|e| e.to_string())?;
            total += start.elapsed();
            finite_large += checked(&g, 2, &out)?.is_some() as usize;
            if j % 25 == 0 {
                accepted += labeling_is_unique(&g, &mut rng)? as usize;
            }
        }
        points.push((n as f64, total.as_secs_f64()));
    }
    let slope = loglog_slope(&points);
    let timings: Vec<String> = points
        .iter()
        .map(|(n, t)| format!("n={n}: {:.1} ms", t * 1e3))
        .collect();
    if slope.is_nan() || slope > MAX_CACTUS_SLOPE {
        return Err(format!(
            "log-log slope {slope:.2} exceeds {MAX_CACTUS_SLOPE} ({})",
            timings.join(", ")
        ));
    }
    Ok(format!(
        "300 small cacti match brute force ({finite_small} finite); 1000 large solved ({finite_large} finite, \
         witnesses valid); slope {slope:.2} [{}]; labeling unique on {accepted} accepted instances",
        timings.join(", ")
    ))
}

fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .map(|&(x, y)| (x.ln(), y.max(1e-9).ln()))
        .collect();
    let len = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    sxy / sxx
}

fn block_graphs() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut finite = 0;
    for i in 0..300u64 {
        let n = rng.random_range(1..=14);
        let g = shuffled(&random_block_graph(n, rng.random_range(2..=5), 8000 + i), i);
        for d in 1..=3 {
            let fast = blockgraph_chi(&g, d).map_err(|e| e.to_string())?;
            let got = checked(&g, d, &fast)?;
            let brute = oracle(&g, d)?;
            ensure!(
                got == brute,
                "counterexample: d={d}, algorithm {} vs brute force {}, n={}, edges {:?}",
                show(got),
                show(brute),
                g.n(),
                g.edges().collect::<Vec<_>>()
            );
            finite += got.is_some() as usize;
        }
    }
    Ok(format!("900 comparisons agree ({finite} finite)"))
}

/// Decides the source of `map` by brute force, and checks a lifted target
/// witness when there is one.
fn round_trip(target: &Graph, map: &ReductionMap, source_yes: bool) -> Result<bool, String> {
    let (k, d) = map.reduction.target_parameters();
    let witness = brute_solve(target, k, d, &Budget::unlimited()).map_err(|e| e.to_string())?;
    ensure!(
        witness.is_some() == source_yes,
        "{:?}: source {} but target {}",
        map.reduction,
        source_yes,
        witness.is_some()
    );
    if let Some(w) = witness {
        lift_solution(map, &w).map_err(|e| format!("lift failed: {e}"))?;
    }
    Ok(source_yes)
}

fn yes(g: &Graph, k: usize, d: usize) -> Result<bool, String> {
    Ok(brute_solve(g, k, d, &Budget::unlimited())
        .map_err(|e| e.to_string())?
        .is_some())
}

/// The circulant graph on `n` vertices with offsets `a` and `b`.
fn circulant(n: usize, a: usize, b: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|v| [(v, (v + a) % n), (v, (v + b) % n)])).unwrap()
}

fn reductions_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut tally = Vec::new();

    let mut count = [0; 2];
    for i in 0..30u64 {
        let n = rng.random_range(2..=7);
        let g = gnp(n, rng.random_range(0.3..=0.8), 9000 + i);
        let k = rng.random_range(3..=4);
        let d = rng.random_range(1..=2);
        let (target, map) = reduce_coloring_to_exact(&g, k, d).map_err(|e| e.to_string())?;
        let ans = round_trip(&target, &map, yes(&g, k, 0)?)?;
        count[ans as usize] += 1;
    }
    tally.push(format!("coloring {}/{}", count[1], count[0]));

    let mut sources = vec![complete(5).unwrap(), octahedron(), circulant(8, 1, 3)];
    sources.extend((7..=12).map(|n| circulant(n, 1, 2)));
    sources.extend((9..=12).map(|n| circulant(n, 1, 3)));
    sources.extend((10..=11).map(|n| circulant(n, 1, 4)));
    let mut count = [0; 2];
    'planar: for d in [1, 2] {
        for g in &sources {
            if count[0] + count[1] == 30 {
                break 'planar;
            }
            let (target, map) = reduce_planar_variant(g, d).map_err(|e| e.to_string())?;
            let ans = round_trip(&target, &map, yes(g, 3, 0)?)?;
            count[ans as usize] += 1;
        }
    }
    tally.push(format!("planar {}/{}", count[1], count[0]));

    let mut count = [0; 2];
    for i in 0..30u64 {
        let n = rng.random_range(2..=5);
        let g = gnp(n, rng.random_range(0.4..=1.0), 9100 + i);
        let d = rng.random_range(1..=2);
        let (target, map) = reduce_increment_defect(&g, d).map_err(|e| e.to_string())?;
        let ans = round_trip(&target, &map, yes(&g, 2, d)?)?;
        count[ans as usize] += 1;
    }
    tally.push(format!("increment {}/{}", count[1], count[0]));

    let mut count = [0; 2];
    for i in 0..30 {
        let vars = rng.random_range(3..=5);
        let clauses: Vec<[usize; 3]> = (0..rng.random_range(1..=3))
            .map(|_| {
                let mut c = [0; 3];
                c.iter_mut().for_each(|x| *x = rng.random_range(0..vars));
                c
            })
            .collect();
        let f = NaeFormula::new(vars, clauses, false).map_err(|e| e.to_string())?;
        let cycle = if i % 2 == 0 {
            VariableCycle::C4
        } else {
            VariableCycle::C3
        };
        let (target, map) = reduce_nae3sat(&f, cycle);
        let ans = round_trip(&target, &map, f.brute_force().is_some())?;
        count[ans as usize] += 1;
    }
    tally.push(format!("nae3sat {}/{}", count[1], count[0]));

    let f = NaeFormula::new(4, vec![[0, 1, 2], [0, 2, 3]], true).map_err(|e| e.to_string())?;
    let (target, map) = reduce_nae3sat(&f, VariableCycle::C4);
    let w = brute_solve(&target, 2, 2, &Budget::unlimited()).map_err(|e| e.to_string())?;
    let w = w.ok_or("example formula target has no exact (2, 2)-coloring")?;
    match lift_solution(&map, &w).map_err(|e| e.to_string())? {
        SourceSolution::Assignment(a) => {
            ensure!(f.is_nae_satisfied(&a), "lifted assignment {a:?} is not NAE")
        }
        other => return Err(format!("unexpected lift {other:?}")),
    }
    Ok(format!(
        "yes/no per reduction: {}; example formula lifts",
        tally.join(", ")
    ))
}

fn tightness_witness() -> Outcome {
    let h = tightness_gadget();
    let b = Budget::unlimited();
    let one = chi_via_quotients(&h, 1, &b).map_err(|e| e.to_string())?;
    ensure!(
        checked(&h, 1, &one)? == Some(3),
        "H' gives {}",
        show(one.chi())
    );
    let three = h.disjoint_union(&h).disjoint_union(&h);
    let out = chi_via_quotients(&three, 1, &b).map_err(|e| e.to_string())?;
    ensure!(
        checked(&three, 1, &out)? == Some(3),
        "three copies give {}",
        show(out.chi())
    );
    Ok("H' and 3 H' both have chi_1 = 3".into())
}
