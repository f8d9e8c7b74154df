//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Each check also enforces its time budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use mulrank::arith;
use mulrank::bounds::{self, BoundQuery, Method, Status, Target};
use mulrank::evalinterp::{self, RankResult};
use mulrank::gaps::{self, ValueSet};
use mulrank::rational::{self, Rational};
use mulrank::AlgebraSpec;

const GRID_Q: [u64; 11] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25];

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn genus0_grid(short: bool) -> Result<String, String> {
    let mut cases = 0;
    for q in GRID_Q {
        for k in 1..=(q / 2 + 1) as usize {
            let alg = if short {
                evalinterp::construct_genus0_short(q, k)
            } else {
                evalinterp::construct_genus0_field(q, k)
            }
            .map_err(|e| format!("q={q} k={k}: {e}"))?;
            ensure(alg.length() == 2 * k - 1, || format!("q={q} k={k}: length {}", alg.length()))?;
            let report = evalinterp::verify(&alg, false).map_err(|e| e.to_string())?;
            ensure(report.passed && report.pairs_checked == k * k, || {
                format!("q={q} k={k}: verification failed at {:?}", report.failures.first().map(|f| (f.a, f.b)))
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (q, k) pairs verified"))
}

fn c1_field() -> Result<String, String> {
    genus0_grid(false)
}

fn c2_short() -> Result<String, String> {
    genus0_grid(true)
}

fn c3_rank() -> Result<String, String> {
    let specs = [
        ("F_4/F_2", AlgebraSpec::field(2, 2)),
        ("F_9/F_3", AlgebraSpec::field(3, 2)),
        ("F_2[t]/(t^2)", AlgebraSpec::truncation(2, 2)),
    ];
    for (name, spec) in specs {
        let spec = spec.map_err(|e| e.to_string())?;
        match evalinterp::bruteforce_symmetric_rank(&spec, 3).map_err(|e| e.to_string())? {
            RankResult::Exact { rank: 3, witness } => {
                let ok = evalinterp::verify_symmetric_algorithm(&witness).map_err(|e| e.to_string())?.passed;
                ensure(ok, || format!("{name}: witness does not verify"))?;
            }
            other => return Err(format!("{name}: expected rank 3, got {other:?}")),
        }
        let r = evalinterp::bruteforce_symmetric_rank(&spec, 2).map_err(|e| e.to_string())?;
        ensure(r == RankResult::Exceeds(2), || format!("{name}: expected EXCEEDS(2), got {r:?}"))?;
    }
    Ok("rank 3 and EXCEEDS(2) for all three algebras".into())
}

fn c4_gap() -> Result<String, String> {
    let cert = gaps::epsilon_window(&rational::int(139), 2_100_000, &ValueSet::Primes).map_err(|e| e.to_string())?;
    ensure(cert.epsilon_window == rational::ratio(10, 139), || {
        format!("window gap {}", rational::to_string(&cert.epsilon_window))
    })?;
    ensure(cert.max_left == rational::int(139) && cert.max_right == 149, || {
        format!("maximiser ({}, {})", rational::to_string(&cert.max_left), cert.max_right)
    })?;
    Ok("eps over [139, 2100000] = 10/139 at (139, 149)".into())
}

fn c5_smooth() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let lo = rational::ratio(3, 2);
    let hi = rational::int(1_000_000);
    for p in [7u64, 11] {
        for _ in 0..1000 {
            let den: i128 = rng.gen_range(1..=1000);
            let num: i128 = rng.gen_range(3 * den / 2..=1_000_000 * den);
            let x: Rational = rational::ratio(num, den).max(lo).min(hi);
            let c = gaps::smooth_strategy_ceiling(&x, &[2], p).map_err(|e| e.to_string())?;
            let v = rational::int(c.value as i128);
            ensure(v >= x && v <= rational::int(2) * x, || {
                format!("p={p} x={}: ceiling {}", rational::to_string(&x), c.value)
            })?;
        }
    }
    Ok("2000 samples within [x, 2x]".into())
}

fn divisor_sum_cusps(n: u64) -> u64 {
    let mut total = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let e = n / d;
            let g = num_integer::gcd(d, e);
            total += arith::euler_phi(g);
            if e != d {
                total += arith::euler_phi(g);
            }
        }
        d += 1;
    }
    total
}

fn c6_numerology() -> Result<String, String> {
    for n in 1..=100_000u64 {
        let e = arith::elliptic_data(n);
        let oracle = divisor_sum_cusps(n);
        ensure(e.cusps == oracle, || format!("N={n}: cusps {} vs divisor sum {oracle}", e.cusps))?;
        let psi = arith::dedekind_psi(n);
        let twelve_g = psi as i128 + 12 - 6 * e.cusps as i128 - 4 * e.nu3 as i128 - 3 * e.nu2 as i128;
        ensure(twelve_g >= 0 && twelve_g % 12 == 0, || format!("N={n}: 12g = {twelve_g}"))?;
        let g = arith::genus_x0(n);
        ensure(12 * g as i128 == twelve_g && 12 * g <= psi, || format!("N={n}: genus {g}, psi {psi}"))?;
    }
    Ok("N <= 100000".into())
}

fn c7_engine() -> Result<String, String> {
    let r = bounds::bound_ballet_plus(7, 29).map_err(|e| e.to_string())?;
    ensure(
        r.value == Some(68) && r.provenance.psi == Some(138) && r.provenance.level == Some(137),
        || format!("ballet-plus(7,29): {:?} psi* {:?} N {:?}", r.value, r.provenance.psi, r.provenance.level),
    )?;

    let mut cells = 0;
    let mut compared = 0;
    for p in [7u64, 11, 13] {
        let cap = rational::int(2) * (rational::int(1) + rational::ratio(2, p as i128 - 2));
        for k in 30..=500u64 {
            let q = BoundQuery::new(Target::SymExt, p * p, k);
            let best = bounds::best_bound(&q).map_err(|e| format!("p={p} k={k}: {e}"))?;
            let v = best.winner.value.unwrap();
            ensure(rational::ratio(v as i128, k as i128) <= cap, || format!("p={p} k={k}: {v}/k exceeds cap"))?;
            cells += 1;

            let ballet = bounds::bound_ballet_plus(p, k).map_err(|e| e.to_string())?;
            if let (Some(b), Some(level)) = (ballet.value, ballet.provenance.level) {
                if level <= q.n_max {
                    let m = bounds::bound_modular_search(p, k, q.n_max, false).map_err(|e| e.to_string())?;
                    ensure(m.value.is_some_and(|m| m <= b), || {
                        format!("p={p} k={k}: modular {:?} vs ballet-plus {b} (N = {level})", m.value)
                    })?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("68/138/137; ratio cap on {cells} cells; search <= ballet-plus on {compared} cells"))
}

fn c8_constants() -> Result<String, String> {
    let c = bounds::asymptotic_constants(7).map_err(|e| e.to_string())?;
    let got = [&c.sym_ext, &c.classical_ext, &c.sym_short, &c.classical_short];
    let want = [rational::ratio(12, 5), rational::ratio(18, 5), rational::ratio(12, 5), rational::ratio(18, 5)];
    ensure(got.iter().zip(&want).all(|(a, b)| *a == b), || {
        format!("{:?}", got.iter().map(|r| rational::to_string(r)).collect::<Vec<_>>())
    })?;
    Ok("(12/5, 18/5, 12/5, 18/5)".into())
}

fn c9_flags() -> Result<String, String> {
    for p in [7u64, 11, 13] {
        for k in [30u64, 1000, 1_000_000] {
            let fam = bounds::bound_corollary_family(p, k).map_err(|e| e.to_string())?;
            let get = |m: Method| fam.iter().find(|r| r.method == m).unwrap();
            let iv = get(Method::CorIV);
            let vi = get(Method::CorVI);
            let vii = get(Method::CorVII);
            let t_iv = iv.provenance.threshold.clone().unwrap_or_default();
            let t_vii = vii.provenance.threshold.clone().unwrap_or_default();
            ensure(iv.status == Status::Inapplicable && iv.value.is_none() && t_iv.starts_with(&format!("e^50*{p}")), || {
                format!("p={p} k={k}: cor-iv {:?} {t_iv:?}", iv.status)
            })?;
            ensure(
                vii.status == Status::Inapplicable
                    && vii.value.is_none()
                    && t_vii == format!("({p}-2)/24*e^(e^33.3)"),
                || format!("p={p} k={k}: cor-vii {:?} {t_vii:?}", vii.status),
            )?;
            ensure(vi.status == Status::NonEffective && !vi.effective && vi.value.is_none(), || {
                format!("p={p} k={k}: cor-vi {:?}", vi.status)
            })?;
        }
    }
    Ok("cor-iv/cor-vii INAPPLICABLE with thresholds, cor-vi NON-EFFECTIVE".into())
}

fn main() {
    let criteria: [(u32, &str, Duration, Check); 9] = [
        (1, "genus-0 field algorithms of length 2k-1 verify", Duration::from_secs(10), c1_field),
        (2, "genus-0 truncated-product algorithms of length 2l-1 verify", Duration::from_secs(10), c2_short),
        (3, "exact symmetric rank 3 for the three 2-dimensional algebras", Duration::from_secs(60), c3_rank),
        (4, "prime-gap window at 139 equals 10/139", Duration::from_secs(5), c4_gap),
        (5, "2-smooth psi ceiling stays within 2x", Duration::from_secs(5), c5_smooth),
        (6, "cusp formula and genus numerology up to 10^5", Duration::from_secs(30), c6_numerology),
        (7, "bound engine cross-checks", Duration::from_secs(60), c7_engine),
        (8, "asymptotic constants at p = 7", Duration::from_secs(1), c8_constants),
        (9, "non-reproducible items flagged", Duration::from_secs(5), c9_flags),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {id}: {name} ({detail}; {elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id}: {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
