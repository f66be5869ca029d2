//! Command-line front end: generators, relations, Betti tables, edge-ideal
//! tables, consistency sweeps, fuzzing, and Hilbert-series checks.
//!
//! Exit codes: 0 on success, 1 when a mathematical cross-check fails, 2 on
//! invalid input. All results go to stdout, diagnostics to stderr; identical
//! invocations produce byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cycinv::{
    build_relations_2d, build_relations_3d, build_xs, closed_form_betti, groebner_verify,
    hilbert_numerator_check, hilbert_standard_check, hochster_betti, invariant_ring_betti,
    linear_strand_betti, minimal_generators_2d, minimal_generators_3d, Block, FieldChar,
    GeneratorSet, GradingKind, Graph, GroebnerReport, InvariantBetti, Relation, WeightSystem,
};

#[derive(Parser)]
#[command(
    name = "cycinv",
    version,
    about = "Minimal generators, Groebner bases, and graded Betti tables for diagonal cyclic invariant rings"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SystemArgs {
    /// Group order (n >= 3).
    #[arg(long)]
    n: u64,
    /// Comma-separated weights: two entries for the plane, three (summing
    /// to 0 mod n) for space.
    #[arg(long, value_parser = parse_weights)]
    weights: std::vec::Vec<u64>,
}

fn parse_weights(s: &str) -> Result<Vec<u64>, String> {
    s.split(',')
        .map(|w| w.trim().parse::<u64>().map_err(|e| e.to_string()))
        .collect()
}

fn parse_field_char(s: &str) -> Result<FieldChar, String> {
    let p: u64 = s.parse().map_err(|e: std::num::ParseIntError| e.to_string())?;
    let f = if p == 0 { FieldChar::Zero } else { FieldChar::Prime(p) };
    f.validate().map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Print the minimal monomial generators of the invariant ring.
    Gens(SystemArgs),
    /// Print the relation ideal's minimal generators and the Groebner report.
    Relations(SystemArgs),
    /// Full pipeline: generators, relations, certification, both Betti tables.
    Betti {
        #[command(flatten)]
        system: SystemArgs,
        /// Homology field characteristic: 0 or a prime.
        #[arg(long, default_value = "0", value_parser = parse_field_char)]
        field_char: FieldChar,
    },
    /// Betti tables of an edge ideal: either the X[s] family or a JSON graph.
    EdgeBetti {
        /// Vertex count of the X[s] family.
        #[arg(long, conflicts_with = "graph", requires = "s")]
        m: Option<usize>,
        /// Number of deleted cycle edges.
        #[arg(long, requires = "m")]
        s: Option<usize>,
        /// Path to a JSON graph {"m": int, "edges": [[a,b],...]}, 1-based.
        #[arg(long)]
        graph: Option<String>,
        /// Comma-separated positive vertex weights (defaults to all 1).
        #[arg(long, value_parser = parse_weights)]
        weights: Option<std::vec::Vec<u64>>,
        #[arg(long, default_value = "0", value_parser = parse_field_char)]
        field_char: FieldChar,
    },
    /// Cross-check the closed formulas against subset enumeration.
    Sweep {
        #[arg(long, default_value_t = 3)]
        m_min: usize,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
    /// Random weight systems through the full invariant checks.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        count_2d: usize,
        #[arg(long, default_value_t = 50)]
        count_3d: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        n_max_2d: u64,
        #[arg(long, default_value_t = 20)]
        n_max_3d: u64,
    },
    /// Degree-by-degree Hilbert-series identities.
    HilbertCheck {
        #[command(flatten)]
        system: SystemArgs,
        /// Degree bound (defaults to 3n).
        #[arg(long)]
        max_degree: Option<u64>,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CYCINV_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(checks_pass) => {
            if checks_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Ok(true): success. Ok(false): ran, but a cross-check failed. Err: bad
/// input, nothing printed.
fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Gens(system) => {
            let gens = generators_for(&system)?;
            match cli.format {
                Format::Text => emit(&render_gens_text(&gens)),
                Format::Json => print_json(&gens_json(&gens)),
            }
            Ok(true)
        }
        Command::Relations(system) => {
            let gens = generators_for(&system)?;
            let relations = relations_for(&gens);
            let report = groebner_verify(&relations, &gens.presentation_ring());
            match cli.format {
                Format::Text => {
                    emit(&render_relations_text(&gens, &relations, &report));
                }
                Format::Json => {
                    print_json(&json!({
                        "n": gens.weights().n(),
                        "weights": gens.weights().weights(),
                        "m": gens.m(),
                        "relations": relations_json(&gens, &relations),
                        "groebner": groebner_json(&report),
                    }));
                }
            }
            Ok(report.pass)
        }
        Command::Betti { system, field_char } => {
            let ws = weight_system(&system)?;
            let out = invariant_ring_betti(&ws, field_char).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => emit(&render_betti_text(&out)),
                Format::Json => print_json(&betti_json(&out)),
            }
            Ok(out.all_checks_pass())
        }
        Command::EdgeBetti {
            m,
            s,
            graph,
            weights,
            field_char,
        } => edge_betti(cli.format, m, s, graph, weights, field_char),
        Command::Sweep { m_min, m_max } => sweep(cli.format, m_min, m_max),
        Command::Fuzz {
            count_2d,
            count_3d,
            seed,
            n_max_2d,
            n_max_3d,
        } => fuzz(cli.format, count_2d, count_3d, seed, n_max_2d, n_max_3d),
        Command::HilbertCheck { system, max_degree } => {
            hilbert_check(cli.format, &system, max_degree)
        }
    }
}

fn weight_system(system: &SystemArgs) -> Result<WeightSystem, String> {
    WeightSystem::new(system.n, system.weights.clone()).map_err(|e| e.to_string())
}

fn generators_for(system: &SystemArgs) -> Result<GeneratorSet, String> {
    let ws = weight_system(system)?;
    let gens = if ws.dim() == 3 {
        minimal_generators_3d(&ws)
    } else {
        minimal_generators_2d(&ws)
    };
    gens.map_err(|e| e.to_string())
}

fn relations_for(gens: &GeneratorSet) -> Vec<Relation> {
    if gens.is_3d() {
        build_relations_3d(gens)
    } else {
        build_relations_2d(gens)
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    let _ = out.flush();
}

fn print_json(value: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(value).unwrap()));
}

fn block_name(block: Block) -> &'static str {
    match block {
        Block::Pure2D => "2d",
        Block::T1 => "t1",
        Block::T2 => "t2",
        Block::T3 => "t3",
        Block::ABlock => "a",
    }
}

fn render_gens_text(gens: &GeneratorSet) -> String {
    let ws = gens.weights();
    let names = gens.gen_names();
    let ambient = gens.ambient_names();
    let mut out = format!(
        "n = {}, weights = {}\n",
        ws.n(),
        join_u64(ws.weights())
    );
    for (name, g) in names.iter().zip(gens.generators()) {
        let _ = writeln!(
            out,
            "{name} = {}  (degree {})",
            g.image.render(&ambient),
            g.degree()
        );
    }
    out
}

fn gens_json(gens: &GeneratorSet) -> Value {
    let ambient = gens.ambient_names();
    let names = gens.gen_names();
    let list: Vec<Value> = names
        .iter()
        .zip(gens.generators())
        .map(|(name, g)| {
            json!({
                "name": name,
                "monomial": g.image.render(&ambient),
                "exponents": g.image.exponents(),
                "degree": g.degree(),
                "block": block_name(g.block),
            })
        })
        .collect();
    json!({
        "n": gens.weights().n(),
        "weights": gens.weights().weights(),
        "m": gens.m(),
        "generators": list,
    })
}

fn var_name_refs(names: &[String]) -> Vec<&str> {
    names.iter().map(String::as_str).collect()
}

fn render_relations_text(
    gens: &GeneratorSet,
    relations: &[Relation],
    report: &GroebnerReport,
) -> String {
    let names = gens.var_names();
    let names = var_name_refs(&names);
    let mut out = format!(
        "n = {}, weights = {}, m = {}, relations = {}\n",
        gens.weights().n(),
        join_u64(gens.weights().weights()),
        gens.m(),
        relations.len()
    );
    for r in relations {
        let _ = writeln!(out, "{}", r.render(&names));
    }
    out.push_str(&render_groebner_text(report));
    out
}

fn render_groebner_text(report: &GroebnerReport) -> String {
    let mut out = format!(
        "Groebner check: {} (pairs checked {}, skipped coprime {})\n",
        if report.pass { "PASS" } else { "FAIL" },
        report.pairs_checked,
        report.pairs_skipped_coprime
    );
    for ((a, b), (c, d)) in &report.failing_pairs {
        let _ = writeln!(out, "  irreducible S-pair: R_{{{a},{b}}} with R_{{{c},{d}}}");
    }
    out
}

fn groebner_json(report: &GroebnerReport) -> Value {
    json!({
        "pass": report.pass,
        "pairs_checked": report.pairs_checked,
        "pairs_skipped_coprime": report.pairs_skipped_coprime,
        "failing_pairs": report
            .failing_pairs
            .iter()
            .map(|((a, b), (c, d))| json!([[a, b], [c, d]]))
            .collect::<Vec<_>>(),
    })
}

fn relations_json(gens: &GeneratorSet, relations: &[Relation]) -> Vec<Value> {
    let names = gens.var_names();
    let names = var_name_refs(&names);
    relations
        .iter()
        .map(|r| {
            json!({
                "i": r.i,
                "j": r.j,
                "lead": r.binomial.lead().render(&names),
                "tail": r.binomial.tail().map(|t| t.render(&names)),
                "a_exponent": r.factorization.a_exponent,
                "factor_exponents": r.factorization.exponents,
                "used_fallback": r.factorization.used_fallback,
            })
        })
        .collect()
}

fn render_betti_text(out: &InvariantBetti) -> String {
    let gens = &out.generators;
    let mut text = render_gens_text(gens);
    let names = gens.var_names();
    let names = var_name_refs(&names);
    let _ = writeln!(text, "relations = {}", out.relations.len());
    for r in &out.relations {
        let _ = writeln!(text, "{}", r.render(&names));
    }
    text.push_str(&render_groebner_text(&out.groebner));
    let _ = writeln!(
        text,
        "purity: {}",
        if out.diagnostics.pure { "ok" } else { "FAIL" }
    );
    let _ = writeln!(
        text,
        "closed form vs subset enumeration: {}",
        if out.diagnostics.hochster_matches_closed_form {
            "ok"
        } else {
            "FAIL"
        }
    );
    if out.diagnostics.degenerate {
        let _ = writeln!(text, "degenerate case: free presentation, trivial tables");
    }
    text.push_str(&out.weighted.render_text());
    text.push_str(&out.polynomial.render_text());
    text
}

fn betti_json(out: &InvariantBetti) -> Value {
    json!({
        "n": out.generators.weights().n(),
        "weights": out.generators.weights().weights(),
        "m": out.generators.m(),
        "generators": gens_json(&out.generators)["generators"],
        "relations": relations_json(&out.generators, &out.relations),
        "groebner": groebner_json(&out.groebner),
        "diagnostics": {
            "degenerate": out.diagnostics.degenerate,
            "pure": out.diagnostics.pure,
            "hochster_matches_closed_form": out.diagnostics.hochster_matches_closed_form,
            "deleted_edges": out.diagnostics.deleted_edges,
        },
        "weighted_table": out.weighted.to_json(),
        "polynomial_table": out.polynomial.to_json(),
    })
}

fn totals_line(totals: &BTreeMap<i64, BigUint>) -> String {
    let parts: Vec<String> = totals
        .iter()
        .map(|(i, r)| format!("beta_{i} = {r}"))
        .collect();
    parts.join(", ")
}

fn edge_betti(
    format: Format,
    m: Option<usize>,
    s: Option<usize>,
    graph_path: Option<String>,
    weights: Option<Vec<u64>>,
    field_char: FieldChar,
) -> Result<bool, String> {
    let (g, family) = match (m, s, graph_path) {
        (Some(m), Some(s), None) => (build_xs(m, s).map_err(|e| e.to_string())?, Some((m, s))),
        (None, None, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {path}: {e}"))?;
            let value: Value =
                serde_json::from_str(&text).map_err(|e| format!("bad JSON in {path}: {e}"))?;
            (Graph::from_json(&value).map_err(|e| e.to_string())?, None)
        }
        _ => return Err("pass either --m and --s, or --graph".into()),
    };
    let unit = vec![1u64; g.vertex_count()];
    let weights = weights.unwrap_or_else(|| unit.clone());
    let table = hochster_betti(&g, &weights, field_char).map_err(|e| e.to_string())?;
    let strand = linear_strand_betti(&g).map_err(|e| e.to_string())?;

    let mut ok = true;
    let mut closed = None;
    if let Some((m, s)) = family {
        let ct = closed_form_betti(m, s).map_err(|e| e.to_string())?;
        let unit_table = if weights == unit {
            table.clone()
        } else {
            hochster_betti(&g, &unit, field_char).map_err(|e| e.to_string())?
        };
        ok &= unit_table.relabel_grading(GradingKind::PolynomialDegree) == ct;
        for (i, r) in &strand {
            ok &= ct.get(*i, *i as u64 + 2) == *r;
        }
        closed = Some(ct);
    }

    match format {
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(
                text,
                "graph: {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            );
            text.push_str(&table.render_text());
            let _ = writeln!(text, "totals: {}", totals_line(&table.totals()));
            let _ = writeln!(text, "linear strand: {}", totals_line(&strand));
            if let Some(ct) = &closed {
                text.push_str(&ct.render_text());
                let _ = writeln!(
                    text,
                    "closed form vs subset enumeration: {}",
                    if ok { "ok" } else { "FAIL" }
                );
            }
            emit(&text);
        }
        Format::Json => {
            let mut obj = json!({
                "graph": g.to_json(),
                "table": table.to_json(),
                "linear_strand": strand
                    .iter()
                    .map(|(i, r)| json!({"i": i, "rank": rank_json(r)}))
                    .collect::<Vec<_>>(),
            });
            if let Some(ct) = &closed {
                obj["closed_form_table"] = ct.to_json();
                obj["agreement"] = json!(ok);
            }
            print_json(&obj);
        }
    }
    Ok(ok)
}

fn rank_json(r: &BigUint) -> Value {
    match u64::try_from(r.clone()) {
        Ok(v) => json!(v),
        Err(_) => json!(r.to_string()),
    }
}

fn sweep(format: Format, m_min: usize, m_max: usize) -> Result<bool, String> {
    if m_min < 3 || m_min > m_max {
        return Err("need 3 <= m-min <= m-max".into());
    }
    let mut rows = Vec::new();
    let mut all_ok = true;
    for m in m_min..=m_max {
        for s in 0..=m {
            let g = build_xs(m, s).map_err(|e| e.to_string())?;
            let closed = closed_form_betti(m, s).map_err(|e| e.to_string())?;
            let unit = vec![1u64; m];
            let rational = hochster_betti(&g, &unit, FieldChar::Zero)
                .map_err(|e| e.to_string())?
                .relabel_grading(GradingKind::PolynomialDegree);
            let char2 = hochster_betti(&g, &unit, FieldChar::Prime(2))
                .map_err(|e| e.to_string())?
                .relabel_grading(GradingKind::PolynomialDegree);
            let strand = linear_strand_betti(&g).map_err(|e| e.to_string())?;
            let formula_ok = rational == closed;
            let char_ok = char2 == rational;
            let strand_ok = strand
                .iter()
                .all(|(i, r)| closed.get(*i, *i as u64 + 2) == *r)
                && closed
                    .entries()
                    .filter(|(i, j, _)| *i >= 0 && *j == *i as u64 + 2)
                    .all(|(i, _, r)| strand.get(&i).cloned().unwrap_or_default() == *r);
            let ok = formula_ok && char_ok && strand_ok;
            all_ok &= ok;
            rows.push((m, s, formula_ok, char_ok, strand_ok));
        }
    }
    match format {
        Format::Text => {
            let mut text = String::new();
            for (m, s, f, c, l) in &rows {
                let _ = writeln!(
                    text,
                    "m={m} s={s}: formula={} char2={} strand={}",
                    pass(*f),
                    pass(*c),
                    pass(*l)
                );
            }
            let _ = writeln!(
                text,
                "sweep: {} ({} cases)",
                if all_ok { "PASS" } else { "FAIL" },
                rows.len()
            );
            emit(&text);
        }
        Format::Json => {
            print_json(&json!({
                "pass": all_ok,
                "cases": rows
                    .iter()
                    .map(|(m, s, f, c, l)| json!({
                        "m": m,
                        "s": s,
                        "formula": f,
                        "char2": c,
                        "strand": l,
                    }))
                    .collect::<Vec<_>>(),
            }));
        }
    }
    Ok(all_ok)
}

fn pass(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

/// One fuzzed system through every structural check.
fn fuzz_one(ws: &WeightSystem) -> Result<String, String> {
    let gens = if ws.dim() == 3 {
        minimal_generators_3d(ws)
    } else {
        minimal_generators_2d(ws)
    }
    .map_err(|e| e.to_string())?;
    let m = gens.m();

    // Staircase and minimality of the generator list.
    let list = gens.generators();
    for (idx, g) in list.iter().enumerate() {
        if !ws.is_invariant(&g.image) {
            return Err(format!("generator {idx} not invariant"));
        }
        for (jdx, h) in list.iter().enumerate() {
            if idx != jdx && g.image.divides(&h.image) {
                return Err(format!("generator {idx} divides generator {jdx}"));
            }
        }
    }
    if ws.dim() == 2 {
        for w in list.windows(2) {
            if w[0].image.exp(0) <= w[1].image.exp(0) || w[0].image.exp(1) >= w[1].image.exp(1)
            {
                return Err("staircase violated".into());
            }
        }
    } else {
        let (r, s, t) = gens.block_sizes().expect("3D generator set");
        let blocks: [(usize, usize, usize, usize); 3] =
            [(1, r, 0, 1), (r + 1, r + s, 1, 2), (r + s + 1, r + s + t, 2, 0)];
        for (lo, hi, v1, v2) in blocks {
            for k in lo..hi {
                let a = gens.b_image(k);
                let b = gens.b_image(k + 1);
                if a.exp(v1) <= b.exp(v1) || a.exp(v2) >= b.exp(v2) {
                    return Err(format!("block staircase violated at index {k}"));
                }
            }
            if gens.b_image(lo).exp(v2) != 0 || gens.b_image(hi).exp(v1) == 0 {
                return Err("block boundary violated".into());
            }
        }
    }

    let relations = relations_for(&gens);
    let expected = if ws.dim() == 2 {
        if m >= 2 {
            (m - 1) * (m - 2) / 2
        } else {
            0
        }
    } else {
        m * (m - 3) / 2
    };
    if relations.len() != expected {
        return Err(format!(
            "relation count {} != expected {expected}",
            relations.len()
        ));
    }
    for r in &relations {
        let tail = r.binomial.tail().ok_or("monomial relation")?;
        if gens.pi(r.binomial.lead()) != gens.pi(tail) {
            return Err(format!("R_{{{},{}}} not exact", r.i, r.j));
        }
    }
    let report = groebner_verify(&relations, &gens.presentation_ring());
    if !report.pass {
        return Err(format!(
            "Groebner check failed on {} pairs",
            report.failing_pairs.len()
        ));
    }
    hilbert_standard_check(&gens, &relations, 3 * ws.n())
        .map_err(|m| format!("Hilbert mismatch at degree {}", m.degree))?;
    Ok(format!(
        "m={m} relations={} groebner=pass hilbert=ok",
        relations.len()
    ))
}

fn fuzz(
    format: Format,
    count_2d: usize,
    count_3d: usize,
    seed: u64,
    n_max_2d: u64,
    n_max_3d: u64,
) -> Result<bool, String> {
    if n_max_2d < 3 || n_max_3d < 3 {
        return Err("need n-max >= 3".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines = Vec::new();
    let mut failures = 0usize;
    for idx in 0..count_2d {
        let n = rng.gen_range(3..=n_max_2d);
        let b = rng.gen_range(1..n);
        let c = rng.gen_range(1..n);
        let ws = WeightSystem::new(n, vec![b, c]).expect("sampled weights are valid");
        match fuzz_one(&ws) {
            Ok(line) => lines.push(format!("2d[{idx}] n={n} weights=({b},{c}) {line}")),
            Err(err) => {
                failures += 1;
                lines.push(format!("2d[{idx}] n={n} weights=({b},{c}) FAIL: {err}"));
            }
        }
    }
    for idx in 0..count_3d {
        let (n, b, c, d) = loop {
            let n = rng.gen_range(3..=n_max_3d);
            let b = rng.gen_range(1..n);
            let c = rng.gen_range(1..n);
            let d = (2 * n - b - c) % n;
            if d != 0 {
                break (n, b, c, d);
            }
        };
        let ws = WeightSystem::new(n, vec![b, c, d]).expect("sampled weights are valid");
        match fuzz_one(&ws) {
            Ok(line) => lines.push(format!("3d[{idx}] n={n} weights=({b},{c},{d}) {line}")),
            Err(err) => {
                failures += 1;
                lines.push(format!("3d[{idx}] n={n} weights=({b},{c},{d}) FAIL: {err}"));
            }
        }
    }
    let total = count_2d + count_3d;
    match format {
        Format::Text => {
            let mut text = String::new();
            for line in &lines {
                let _ = writeln!(text, "{line}");
            }
            let _ = writeln!(
                text,
                "fuzz: {} ({} systems, {} failures, seed {seed})",
                if failures == 0 { "PASS" } else { "FAIL" },
                total,
                failures
            );
            emit(&text);
        }
        Format::Json => {
            print_json(&json!({
                "pass": failures == 0,
                "systems": total,
                "failures": failures,
                "seed": seed,
                "lines": lines,
            }));
        }
    }
    Ok(failures == 0)
}

fn hilbert_check(
    format: Format,
    system: &SystemArgs,
    max_degree: Option<u64>,
) -> Result<bool, String> {
    let gens = generators_for(system)?;
    let relations = relations_for(&gens);
    let dmax = max_degree.unwrap_or(3 * gens.weights().n());
    let standard = hilbert_standard_check(&gens, &relations, dmax);
    // The Betti-numerator identity needs the weighted table; subset
    // enumeration keeps this to modest generator counts.
    let numerator = if gens.m() <= 14 {
        let out = invariant_ring_betti(gens.weights(), FieldChar::Zero)
            .map_err(|e| e.to_string())?;
        Some(hilbert_numerator_check(&out.generators, &out.weighted, dmax))
    } else {
        None
    };
    let ok = standard.is_ok() && numerator.as_ref().map_or(true, Result::is_ok);
    match format {
        Format::Text => {
            let mut text = String::new();
            match standard {
                Ok(()) => {
                    let _ = writeln!(text, "standard-monomial identity: ok up to degree {dmax}");
                }
                Err(m) => {
                    let _ = writeln!(
                        text,
                        "standard-monomial identity: FAIL at degree {} ({} invariants vs {} standard monomials)",
                        m.degree, m.lhs, m.rhs
                    );
                }
            }
            match numerator {
                Some(Ok(())) => {
                    let _ = writeln!(text, "Betti numerator identity: ok up to degree {dmax}");
                }
                Some(Err(m)) => {
                    let _ = writeln!(
                        text,
                        "Betti numerator identity: FAIL at degree {} ({} vs {})",
                        m.degree, m.lhs, m.rhs
                    );
                }
                None => {
                    let _ = writeln!(text, "Betti numerator identity: skipped (m > 14)");
                }
            }
            emit(&text);
        }
        Format::Json => {
            print_json(&json!({
                "max_degree": dmax,
                "standard_identity": standard.is_ok(),
                "numerator_identity": numerator.as_ref().map(Result::is_ok),
                "pass": ok,
            }));
        }
    }
    Ok(ok)
}

fn join_u64(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
