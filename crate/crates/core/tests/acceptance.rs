//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

use std::collections::HashSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use hibi::analysis::{analyze, segre_invariants};
use hibi::families::{
    antichain, chain, disjoint_union, example44_poset, random_poset, sample_poset,
};
use hibi::ideals::{enumerate_ideals, generators, HibiMonomial};
use hibi::levels::{check_level_order, check_weak_duality, compute_levels, psi_as_sigma};
use hibi::oracle::{in_frobenius_power, nu, witness_monomial};
use hibi::paths::{enumerate_maximal_star_paths, path_ranks, satisfies_star};
use hibi::{Limits, Poset, StarPath};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// At least 500 distinct random posets on at most 5 elements, plus chains,
/// antichains and their pairwise disjoint unions up to 6 elements.
fn sweep() -> Vec<Poset> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |p: Poset, out: &mut Vec<Poset>| {
        if seen.insert(format!("{p:?}")) {
            out.push(p);
        }
    };
    let mut seed = 0u64;
    let mut random = 0;
    while random < 500 {
        let n = (seed % 5) as usize + 1;
        let density = [0.15, 0.3, 0.45, 0.6, 0.75][(seed / 5 % 5) as usize];
        let before = out.len();
        push(random_poset(n, density, seed), &mut out);
        random += out.len() - before;
        seed += 1;
        assert!(seed < 1_000_000, "random generator keeps repeating itself");
    }
    let mut blocks: Vec<Poset> = Vec::new();
    for n in 0..=6 {
        blocks.push(chain(n));
        blocks.push(antichain(n));
    }
    for b in &blocks {
        push(b.clone(), &mut out);
    }
    for x in &blocks {
        for y in &blocks {
            if x.len() + y.len() <= 6 {
                push(disjoint_union(x, y), &mut out);
            }
        }
    }
    out
}

fn names(poset: &Poset, path: &StarPath) -> Vec<String> {
    path.names(poset).into_iter().map(String::from).collect()
}

fn criterion_1(limits: &Limits) -> Outcome {
    // ideals and generators of the zig-zag poset
    let p = sample_poset("ex1_2").map_err(err)?;
    let ideals: Vec<String> = enumerate_ideals(&p, limits)
        .map_err(err)?
        .iter()
        .map(|i| i.display(&p))
        .collect();
    let expected = [
        "{}",
        "{1}",
        "{2}",
        "{1, 2}",
        "{2, 4}",
        "{1, 2, 3}",
        "{1, 2, 4}",
        "{1, 2, 3, 4}",
    ];
    ensure!(ideals == expected, "ideals {ideals:?}");
    let gens: HashSet<String> = generators(&p, limits)
        .map_err(err)?
        .iter()
        .map(|g| g.display(&p).to_string())
        .collect();
    let expected_gens: HashSet<String> = [
        "T",
        "T X1",
        "T X2",
        "T X1 X2",
        "T X2 X4",
        "T X1 X2 X3",
        "T X1 X2 X4",
        "T X1 X2 X3 X4",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    ensure!(gens == expected_gens, "generators {gens:?}");

    // up, up, down, down, up, up
    let zig = Poset::build(
        ["a", "b", "c", "d", "e", "f", "g"],
        [
            ("a", "b"),
            ("b", "c"),
            ("d", "c"),
            ("e", "d"),
            ("e", "f"),
            ("f", "g"),
        ],
    )
    .map_err(err)?;
    let c = StarPath::from_names(&zig, &["a", "b", "c", "d", "e", "f", "g"]).map_err(err)?;
    ensure!(c.upper_length() == 4, "len* = {}", c.upper_length());

    let t = sample_poset("ex1_9").map_err(err)?;
    let c1 = StarPath::from_names(&t, &["q1", "q2", "q5", "q6"]).map_err(err)?;
    let c2 = StarPath::from_names(&t, &["q1", "q2", "q3", "q4", "q5", "q6"]).map_err(err)?;
    ensure!(satisfies_star(&t, &c1), "C1 rejected");
    ensure!(!satisfies_star(&t, &c2), "C2 accepted");

    let b = sample_poset("ex1_11").map_err(err)?;
    let (up, low) = path_ranks(&b, limits).map_err(err)?;
    let triple = (up.value, b.rank(), low.value);
    ensure!(triple == (3, 2, 2), "ranks {triple:?}");
    let found: Vec<Vec<String>> = enumerate_maximal_star_paths(&b, limits)
        .map_err(err)?
        .iter()
        .map(|c| names(&b, c))
        .collect();
    for listed in [
        vec!["q1", "q2", "q3"],
        vec!["q1", "q2", "q4", "q5", "q6"],
        vec!["q4", "q2", "q3"],
        vec!["q4", "q5", "q6"],
    ] {
        ensure!(
            found.iter().any(|f| *f == listed),
            "missing {listed:?}, found {found:?}"
        );
    }
    Ok(format!(
        "8 ideals, 8 generators, {} maximal (*)-paths",
        found.len()
    ))
}

fn criterion_2_and_6(posets: &[Poset], limits: &Limits) -> (Outcome, Outcome) {
    let mut analyzed = 0;
    let mut integer_failure = None;
    let mut sweep_failure = None;
    for p in posets {
        let result = (|| -> Result<(), String> {
            let (up, low) = path_ranks(p, limits).map_err(err)?;
            let labeling = compute_levels(p);
            let fpt = labeling.bottom_level() as i64;
            let ext = labeling.extended();
            let ext_lower = path_ranks(ext.poset(), limits).map_err(err)?.1.value;
            ensure!(
                fpt == low.value + 2 && fpt == ext_lower,
                "levels {fpt}, lower rank + 2 = {}, extended lower rank {ext_lower}",
                low.value + 2
            );
            let psi = psi_as_sigma(&labeling).map_err(err)?;
            ensure!(check_level_order(&labeling), "level order violated");
            ensure!(
                check_weak_duality(ext, &psi, limits).map_err(err)?,
                "weak duality fails"
            );
            let w = labeling.witness();
            ensure!(
                satisfies_star(ext.poset(), w) && w.upper_length() as i64 == fpt,
                "witness {} does not attain {fpt}",
                w.display(ext.poset())
            );
            let chain_bound = p.min_maximal_chain() + 2;
            ensure!(
                fpt <= chain_bound && chain_bound <= p.rank() + 2 && p.rank() + 2 <= up.value + 2,
                "inequality chain fails: {fpt} {chain_bound} {} {}",
                p.rank() + 2,
                up.value + 2
            );
            Ok(())
        })();
        if let Err(e) = result {
            sweep_failure.get_or_insert_with(|| format!("{p:?}: {e}"));
        }
        match analyze(p, limits) {
            Ok(r)
                if r.c_diagonal >= 1
                    && r.fpt >= 1
                    && r.inequality_ok
                    && r.inequality_chain_holds() =>
            {
                analyzed += 1
            }
            Ok(r) => {
                integer_failure.get_or_insert_with(|| format!("{p:?}: {r:?}"));
            }
            Err(e) => {
                integer_failure.get_or_insert_with(|| format!("{p:?}: {e}"));
            }
        }
    }
    let c2 = match sweep_failure {
        None => Ok(format!(
            "{} posets, three fpt computations agree",
            posets.len()
        )),
        Some(e) => Err(e),
    };
    let c6 = match integer_failure {
        None => Ok(format!(
            "{analyzed} reports with positive integer c and fpt"
        )),
        Some(e) => Err(e),
    };
    (c2, c6)
}

fn criterion_3(posets: &[Poset], limits: &Limits) -> Outcome {
    let mut runs = 0;
    for p in posets.iter().filter(|p| p.len() <= 4) {
        let up = path_ranks(p, limits).map_err(err)?.0;
        for q in [2u64, 3] {
            let predicted = (up.value + 2) as u64 * (q - 1);
            let report = nu(p, q, limits).map_err(|e| format!("{p:?} q={q}: {e}"))?;
            ensure!(
                report.nu == predicted,
                "{p:?} q={q}: nu = {}, expected {predicted}",
                report.nu
            );
            ensure!(
                !in_frobenius_power(p, &report.witness, q, limits).map_err(err)?,
                "{p:?} q={q}: oracle witness lies in m^[q]"
            );
            if let Some(path) = &up.path {
                let m: HibiMonomial = witness_monomial(p, path, q).map_err(err)?;
                ensure!(
                    m.t_degree() == predicted,
                    "{p:?} q={q}: witness degree {}",
                    m.t_degree()
                );
                ensure!(
                    !in_frobenius_power(p, &m, q, limits).map_err(err)?,
                    "{p:?} q={q}: constructed monomial {} lies in m^[q]",
                    m.display(p)
                );
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} oracle runs match (rank* + 2)(q - 1)"))
}

fn criterion_4(limits: &Limits) -> Outcome {
    for m in 2..=6 {
        for n in 2..=6 {
            let r = segre_invariants(m, n, limits).map_err(err)?;
            let (hi, lo) = (m.max(n) as i64, m.min(n) as i64);
            ensure!(
                r.c_diagonal == hi && r.minus_a == hi && r.fpt == lo,
                "({m},{n}): c {} -a {} fpt {}",
                r.c_diagonal,
                r.minus_a,
                r.fpt
            );
            ensure!(
                (r.c_diagonal == r.fpt) == (m == n),
                "({m},{n}): c = fpt mismatch"
            );
        }
    }
    Ok("25 Segre products".into())
}

fn criterion_5(limits: &Limits) -> Outcome {
    let mut count = 0;
    for a in 1..=4 {
        for b in 1..=a {
            for c in 1..=b {
                let p = example44_poset(a, b, c, limits).map_err(err)?;
                ensure!(p.is_connected(), "({a},{b},{c}) disconnected");
                let (up, low) = path_ranks(&p, limits).map_err(err)?;
                let found = (up.value, p.rank(), low.value);
                ensure!(
                    found == (a as i64, b as i64, c as i64),
                    "({a},{b},{c}) realized {found:?}"
                );
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples realized"))
}

fn run_cli(args: &[&str], stdin: Option<&[u8]>) -> Result<(i32, String), String> {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hibi"))
        .args(args)
        .env_remove("HIBI_MAX_STATES")
        .env_remove("HIBI_MAX_ELEMENTS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(err)?;
    let mut pipe = child.stdin.take().expect("piped stdin");
    pipe.write_all(stdin.unwrap_or_default()).map_err(err)?;
    drop(pipe);
    let out = child.wait_with_output().map_err(err)?;
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    ))
}

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn criterion_7() -> Outcome {
    let (code, out) = run_cli(&["invariants", &data("ex1_11.txt"), "--json"], None)?;
    ensure!(code == 0, "invariants exited {code}");
    let v: serde_json::Value = serde_json::from_str(&out).map_err(err)?;
    for (key, want) in [
        ("rank", 2),
        ("upper_rank", 3),
        ("lower_rank", 2),
        ("c_diagonal", 5),
        ("fpt", 4),
        ("minus_a", 4),
    ] {
        ensure!(v[key] == serde_json::json!(want), "{key} = {}", v[key]);
    }

    let (code, generated) = run_cli(&["gen", "--family", "segre", "--params", "3,4"], None)?;
    ensure!(code == 0, "gen exited {code}");
    let (code, out) = run_cli(&["invariants", "-", "--json"], Some(generated.as_bytes()))?;
    ensure!(code == 0, "piped invariants exited {code}");
    let v: serde_json::Value = serde_json::from_str(&out).map_err(err)?;
    ensure!(
        v["c_diagonal"] == serde_json::json!(4) && v["fpt"] == serde_json::json!(3),
        "segre (3,4): {out}"
    );

    let (code, out) = run_cli(&["nu", &data("ex1_2.txt"), "--q", "2"], None)?;
    ensure!(
        code == 0 && out == "nu(2) = 4 (predicted 4) MATCH\n",
        "nu printed {out:?}"
    );

    let (code, _) = run_cli(&["invariants", "-"], Some(b"a < b\nb <\n"))?;
    ensure!(code == 1, "malformed input exited {code}");
    let (code, _) = run_cli(
        &["invariants", &data("ex1_11.txt"), "--max-states", "3"],
        None,
    )?;
    ensure!(code == 2, "cap exhaustion exited {code}");
    Ok("three examples reproduced, exit codes 1 and 2".into())
}

fn report(id: &str, limit: Duration, elapsed: Duration, outcome: Outcome, failures: &mut u32) {
    let outcome = match outcome {
        Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
        other => other,
    };
    match outcome {
        Ok(detail) => println!("criterion {id}: PASS ({detail}; {elapsed:.2?} of {limit:?})"),
        Err(detail) => {
            *failures += 1;
            println!("criterion {id}: FAIL ({detail})");
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn main() {
    let limits = Limits::default();
    let mut failures = 0;
    let secs = Duration::from_secs;

    let (c1, d) = timed(|| criterion_1(&limits));
    report("1 worked examples", secs(1), d, c1, &mut failures);

    let ((posets, (c2, c6)), sweep_time) = timed(|| {
        let posets = sweep();
        let outcomes = criterion_2_and_6(&posets, &limits);
        (posets, outcomes)
    });
    report(
        "2 fpt agreement sweep",
        secs(60),
        sweep_time,
        c2,
        &mut failures,
    );

    let (c3, d) = timed(|| criterion_3(&posets, &limits));
    report("3 Frobenius oracle", secs(300), d, c3, &mut failures);

    let (c4, d) = timed(|| criterion_4(&limits));
    report("4 Segre products", secs(1), d, c4, &mut failures);

    let (c5, d) = timed(|| criterion_5(&limits));
    report("5 realizability", secs(60), d, c5, &mut failures);

    report(
        "6 integrality and inequalities",
        secs(60),
        sweep_time,
        c6,
        &mut failures,
    );

    let (c7, d) = timed(criterion_7);
    report("7 CLI contract", secs(1), d, c7, &mut failures);

    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
