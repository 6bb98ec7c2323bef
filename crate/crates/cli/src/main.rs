use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use hurwitz_core::decomposition::{decompose, inferred_u, rho_poly};
use hurwitz_core::hurwitz::{compute, h_onepart};
use hurwitz_core::oracle::Oracle;
use hurwitz_core::polynomiality::{
    check_dilaton, check_string, double_out_of_sample, fit_double_poly, fit_triple_beta,
    fit_triple_poly, lambda_g_constant, lambda_g_constant_as_printed, weak_compositions,
    witten_lowest_coeff, RelationCheck, WittenSymbol,
};
use hurwitz_core::shifted::completed_cycle;
use hurwitz_core::verify::{self, CriterionReport, VerifyConfig};
use hurwitz_core::{partitions_of, HurwitzError, HurwitzQuery, Partition, Rat};

#[derive(Parser, Debug)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact Hurwitz numbers with completed cycles"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest degree the brute-force oracle accepts (at most 7).
    #[arg(long, global = true, default_value_t = 6)]
    oracle_cap: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
struct QueryArgs {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    m: u32,
    /// Completed-cycle orders, e.g. "[3,2]".
    #[arg(long = "K", default_value = "[]")]
    k: String,
    /// Semicolon-separated profiles, e.g. "[2];[1,1]".
    #[arg(long)]
    profiles: String,
    #[arg(long)]
    star: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// H_{d,m}(K; μ^1..μ^r) by the character formula.
    Compute(QueryArgs),
    /// Class expansion of the completed k-cycle.
    CompletedCycle {
        k: u32,
        #[arg(long)]
        star: bool,
    },
    /// Hook-basis coordinates of ρ(β).
    Decompose {
        #[arg(long)]
        beta: String,
    },
    /// Brute-force value, compared with the formula.
    Oracle(QueryArgs),
    PolyCheck(PolyArgs),
    /// Run acceptance suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap every degree range at this value.
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// One-part values H_{d,m}(K; (d), β) for every β ⊢ d.
    Table {
        #[arg(long)]
        d: u32,
        /// Defaults to every m in [1, d].
        #[arg(long)]
        m: Option<u32>,
        #[arg(long = "K", default_value = "[]")]
        k: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyMode {
    Double,
    Triple,
    LambdaG,
    String,
    Dilaton,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long, value_enum)]
    mode: PolyMode,
    #[arg(long = "K")]
    k: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    radius: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    dprime: Option<u32>,
    #[arg(long)]
    g: Option<u32>,
    /// Comma-separated insertions, e.g. "1,0".
    #[arg(long)]
    z: Option<String>,
    #[arg(long)]
    x: Option<u32>,
}

/// Rows for CSV output alongside the JSON document.
struct Output {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    ok: bool,
}

impl Output {
    fn new(json: Value, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Output {
        Output {
            json,
            header,
            rows,
            ok: true,
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, HurwitzError> {
    s.parse()
}

fn parse_profiles(s: &str) -> Result<Vec<Partition>, HurwitzError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(';').map(parse_partition).collect()
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, HurwitzError> {
    v.ok_or_else(|| HurwitzError::InvalidArgument(format!("--{flag} is required for this mode")))
}

fn query(a: &QueryArgs) -> Result<HurwitzQuery, HurwitzError> {
    HurwitzQuery::new(
        a.d,
        a.m,
        parse_partition(&a.k)?,
        parse_profiles(&a.profiles)?,
        a.star,
    )
}

fn query_json(q: &HurwitzQuery) -> Value {
    json!({
        "d": q.d,
        "m": q.m,
        "K": q.k.to_string(),
        "profiles": q.profiles.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(";"),
        "star": q.starred,
    })
}

fn s<T: ToString>(v: T) -> String {
    v.to_string()
}

fn cmd_compute(a: &QueryArgs) -> Result<Output, HurwitzError> {
    let q = query(a)?;
    let v = compute(&q)?;
    let genus = q.genus();
    let json = json!({"value": s(&v), "genus": s(&genus), "query": query_json(&q)});
    let row = vec![
        s(q.d),
        s(q.m),
        s(&q.k),
        json["query"]["profiles"].as_str().unwrap_or("").to_string(),
        s(q.starred),
        s(&genus),
        s(&v),
    ];
    Ok(Output::new(
        json,
        vec!["d", "m", "K", "profiles", "star", "genus", "value"],
        vec![row],
    ))
}

fn cmd_completed_cycle(k: u32, star: bool) -> Result<Output, HurwitzError> {
    let cycle = completed_cycle(k, star)?;
    let mut map = Map::new();
    let mut rows = Vec::new();
    for (mu, c) in cycle.iter() {
        map.insert(s(mu), Value::String(s(c)));
        rows.push(vec![s(mu), s(c)]);
    }
    Ok(Output::new(
        Value::Object(map),
        vec!["class", "coefficient"],
        rows,
    ))
}

fn cmd_decompose(beta: &str) -> Result<Output, HurwitzError> {
    let beta = parse_partition(beta)?;
    let coeffs = decompose(&beta)?;
    let reconstructs = coeffs.reconstruct() == rho_poly(&beta)?;
    let mut a = Map::new();
    let mut u = Map::new();
    let mut rows = Vec::new();
    for (i, c) in &coeffs.a {
        a.insert(s(i), Value::String(s(c)));
        let ui = inferred_u(&beta, *i);
        u.insert(s(i), Value::String(s(&ui)));
        rows.push(vec![s(i), s(c), s(&ui)]);
    }
    if !reconstructs {
        return Err(HurwitzError::Internal(format!(
            "decomposition of {beta} does not reconstruct"
        )));
    }
    Ok(Output::new(
        json!({"beta": s(&beta), "coefficients": a, "weights": u, "reconstructs": reconstructs}),
        vec!["i", "a_i", "weight"],
        rows,
    ))
}

fn cmd_oracle(a: &QueryArgs, cap: u32) -> Result<Output, HurwitzError> {
    let q = query(a)?;
    let oracle = Oracle::with_cap(cap)?.h_by_definition(&q)?;
    let formula = compute(&q)?;
    let matched = oracle == formula;
    let mut out = Output::new(
        json!({"oracle": s(&oracle), "formula": s(&formula), "match": matched, "query": query_json(&q)}),
        vec!["oracle", "formula", "match"],
        vec![vec![s(&oracle), s(&formula), s(matched)]],
    );
    out.ok = matched;
    Ok(out)
}

fn relation_json(
    kind: &str,
    k: &Partition,
    z: &[u32],
    x: u32,
    r: &RelationCheck,
) -> (Value, Vec<String>) {
    let zs = z
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    (
        json!({
            "relation": kind,
            "K": s(k),
            "z": zs,
            "x": x,
            "lhs": s(&r.lhs),
            "rhs_stated": s(&r.rhs_printed),
            "rhs_corrected": s(&r.rhs_corrected),
            "holds_stated": r.holds_printed(),
            "holds_corrected": r.holds_corrected(),
        }),
        vec![
            kind.into(),
            s(k),
            zs,
            s(x),
            s(&r.lhs),
            s(&r.rhs_printed),
            s(&r.rhs_corrected),
            s(r.holds_printed()),
            s(r.holds_corrected()),
        ],
    )
}

fn parse_z(z: &str) -> Result<Vec<u32>, HurwitzError> {
    z.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| HurwitzError::Parse(format!("bad insertion list {z:?}")))
        })
        .collect()
}

fn cmd_poly(a: &PolyArgs) -> Result<Output, HurwitzError> {
    match a.mode {
        PolyMode::Double => {
            let k = parse_partition(&need(a.k.clone(), "K")?)?;
            let n = need(a.n, "n")?;
            let top = (k.size() as i64 - n as i64 + 1).max(0) as u32;
            let radius = a.radius.unwrap_or(top + 1);
            let fit = fit_double_poly(&k, n, radius)?;
            let bad = double_out_of_sample(&fit, 2 * radius)?;
            let terms: Map<String, Value> = fit
                .poly
                .terms()
                .map(|(e, c)| {
                    let key = e
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",");
                    (key, Value::String(s(c)))
                })
                .collect();
            let counterexamples: Vec<Value> = bad
                .iter()
                .map(|(p, f, v)| json!({"beta": p, "fitted": s(f), "direct": s(v)}))
                .collect();
            let ok = bad.is_empty() && fit.within_window();
            let json = json!({
                "mode": "double",
                "K": s(&k),
                "n": n,
                "radius": radius,
                "window": [fit.window.0, fit.window.1],
                "degrees": fit.poly.degrees(),
                "vanishes": fit.vanishes(),
                "within_window": fit.within_window(),
                "parity_ok": fit.parity_ok(),
                "symmetric": fit.poly.is_symmetric(),
                "terms": terms,
                "counterexamples": counterexamples,
            });
            let rows = fit
                .poly
                .terms()
                .map(|(e, c)| {
                    vec![
                        e.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" "),
                        s(c),
                    ]
                })
                .collect();
            let mut out = Output::new(json, vec!["exponents", "coefficient"], rows);
            out.ok = ok;
            Ok(out)
        }
        PolyMode::Triple => {
            let d = need(a.d, "d")?;
            let m = need(a.m, "m")?;
            let n = need(a.n, "n")?;
            if let Some(k) = &a.k {
                let k = parse_partition(k)?;
                let f = fit_triple_beta(d, m, n, &k)?;
                let json = json!({"mode": "triple", "K": s(&k), "d": d, "m": m, "n": n,
                    "points": f.points, "degree": f.degree, "bound": f.bound, "within_bound": f.within_bound(),
                    "note": "bounded-domain consistency check"});
                let mut out = Output::new(
                    json,
                    vec!["points", "degree", "bound"],
                    vec![vec![s(f.points), s(f.degree), s(f.bound)]],
                );
                out.ok = f.within_bound();
                return Ok(out);
            }
            let sp = need(a.s, "s")?;
            let dprime = need(a.dprime, "dprime")?;
            let (h, t) = fit_triple_poly(d, m, n, sp, dprime)?;
            let json = json!({"mode": "triple", "d": d, "m": m, "n": n, "s": sp, "dprime": dprime,
                "plain": {"points": h.points, "degree": h.degree, "bound": h.bound, "within_bound": h.within_bound()},
                "weighted": {"points": t.points, "degree": t.degree, "bound": t.bound, "within_bound": t.within_bound()},
                "note": "bounded-domain consistency check"});
            let rows = vec![
                vec!["plain".into(), s(h.points), s(h.degree), s(h.bound)],
                vec!["weighted".into(), s(t.points), s(t.degree), s(t.bound)],
            ];
            let mut out = Output::new(json, vec!["function", "points", "degree", "bound"], rows);
            out.ok = h.within_bound() && t.within_bound();
            Ok(out)
        }
        PolyMode::LambdaG => {
            let k = parse_partition(&need(a.k.clone(), "K")?)?;
            let n = need(a.n, "n")?;
            let zs = match &a.z {
                Some(z) => vec![parse_z(z)?],
                None => weak_compositions(k.len() as u32, n),
            };
            let mut entries = Vec::new();
            let mut rows = Vec::new();
            let mut ok = true;
            let mut genus = None;
            for z in zs {
                let w = WittenSymbol::new(z.clone(), k.clone())?;
                if let Some(g) = a.g {
                    if g != w.g {
                        return Err(HurwitzError::InvalidArgument(format!(
                            "K={k} with {n} points has genus {}",
                            w.g
                        )));
                    }
                }
                genus = Some(w.g);
                let c = witten_lowest_coeff(&w)?;
                let expect = Rat::from(hurwitz_core::exact_arith::multinomial(&z))
                    * lambda_g_constant(&k, w.g);
                ok &= c == expect;
                let zt = z
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                entries.push(json!({"z": zt, "coefficient": s(&c), "expected": s(&expect), "match": c == expect}));
                rows.push(vec![zt, s(&c), s(&expect), s(c == expect)]);
            }
            let g = genus.unwrap_or(0);
            let json = json!({"mode": "lambda-g", "K": s(&k), "n": n, "g": g,
                "constant": s(lambda_g_constant(&k, g)),
                "constant_stated": s(lambda_g_constant_as_printed(&k, g)),
                "entries": entries});
            let mut out = Output::new(json, vec!["z", "coefficient", "expected", "match"], rows);
            out.ok = ok;
            Ok(out)
        }
        PolyMode::String | PolyMode::Dilaton => {
            let k = parse_partition(&need(a.k.clone(), "K")?)?;
            let z = parse_z(&need(a.z.clone(), "z")?)?;
            let x = need(a.x, "x")?;
            let (kind, r) = match a.mode {
                PolyMode::String => ("string", check_string(&k, &z, x)?),
                _ => ("dilaton", check_dilaton(&k, &z, x)?),
            };
            let (json, row) = relation_json(kind, &k, &z, x, &r);
            let mut out = Output::new(
                json,
                vec![
                    "relation",
                    "K",
                    "z",
                    "x",
                    "lhs",
                    "rhs_stated",
                    "rhs_corrected",
                    "holds_stated",
                    "holds_corrected",
                ],
                vec![row],
            );
            out.ok = r.holds_corrected();
            Ok(out)
        }
    }
}

fn report_json(r: &CriterionReport) -> Value {
    json!({
        "id": r.id,
        "title": r.title,
        "passed": r.passed(),
        "checked": r.checked,
        "failed": r.failed,
        "failures": r.failures,
        "notes": r.notes,
    })
}

fn cmd_verify(suite: &str, dmax: Option<u32>, cap: u32) -> Result<Output, HurwitzError> {
    let mut cfg = match dmax {
        Some(d) => VerifyConfig::capped(d),
        None => VerifyConfig::default(),
    };
    cfg.oracle = Oracle::with_cap(cap)?;
    let reports = match suite {
        "all" => verify::run_all(&cfg),
        "1" => vec![verify::completed_cycles()],
        "2" => vec![verify::master_equivalence(&cfg).0],
        "3" => vec![
            verify::engine_agreement(&cfg),
            verify::bernoulli_constant(&cfg),
        ],
        "3ab" => vec![verify::engine_agreement(&cfg)],
        "3c" => vec![verify::bernoulli_constant(&cfg)],
        "4" => vec![verify::frobenius(&cfg)],
        "5" => vec![verify::characters(&cfg)],
        "6" => vec![verify::decomposition(&cfg)],
        "7" => vec![verify::classical_anchor(&cfg)],
        "8" => vec![verify::polynomiality()],
        "9" => vec![verify::parity_vanishing(
            &verify::master_equivalence(&cfg).1,
        )],
        other => {
            return Err(HurwitzError::InvalidArgument(format!(
                "unknown suite {other:?}; expected all, 1..9, 3ab or 3c"
            )))
        }
    };
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.id.as_str())
        .collect();
    let json = json!({
        "criteria": reports.iter().map(report_json).collect::<Vec<_>>(),
        "failing": failing,
    });
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.id.clone(),
                r.title.clone(),
                s(r.passed()),
                s(r.checked),
                s(r.failed),
            ]
        })
        .collect();
    let mut out = Output::new(
        json,
        vec!["id", "title", "passed", "checked", "failed"],
        rows,
    );
    out.ok = failing.is_empty();
    Ok(out)
}

fn cmd_table(d: u32, m: Option<u32>, k: &str) -> Result<Output, HurwitzError> {
    let k = parse_partition(k)?;
    if d == 0 {
        return Err(HurwitzError::InvalidArgument(
            "degree must be positive".into(),
        ));
    }
    let ms: Vec<u32> = match m {
        Some(0) => return Err(HurwitzError::InvalidArgument("m must be positive".into())),
        Some(m) if m > d => vec![],
        Some(m) => vec![m],
        None => (1..=d).collect(),
    };
    let cells: Vec<(u32, Partition)> = partitions_of(d)
        .into_iter()
        .flat_map(|b| ms.iter().map(move |&m| (m, b.clone())))
        .collect();
    let values = cells
        .par_iter()
        .map(|(m, b)| h_onepart(d, *m, &k, b))
        .collect::<Result<Vec<Rat>, _>>()?;
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for ((m, b), v) in cells.iter().zip(values) {
        json_rows.push(json!({"d": d, "m": m, "K": s(&k), "beta": s(b), "value": s(&v)}));
        rows.push(vec![s(d), s(m), s(&k), s(b), s(&v)]);
    }
    Ok(Output::new(
        Value::Array(json_rows),
        vec!["d", "m", "K", "beta", "value"],
        rows,
    ))
}

fn csv_field(f: &str) -> String {
    if f.contains([',', '"', ';', '\n']) {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

fn print(out: &Output, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&out.json).expect("JSON values serialise")
        ),
        Format::Csv => {
            println!("{}", out.header.join(","));
            for row in &out.rows {
                println!(
                    "{}",
                    row.iter()
                        .map(|f| csv_field(f))
                        .collect::<Vec<_>>()
                        .join(",")
                );
            }
        }
    }
}

fn run(cli: &Cli) -> Result<Output, HurwitzError> {
    if cli.oracle_cap > 7 {
        return Err(HurwitzError::InvalidArgument(format!(
            "oracle cap {} exceeds 7",
            cli.oracle_cap
        )));
    }
    match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::CompletedCycle { k, star } => cmd_completed_cycle(*k, *star),
        Command::Decompose { beta } => cmd_decompose(beta),
        Command::Oracle(a) => cmd_oracle(a, cli.oracle_cap),
        Command::PolyCheck(a) => cmd_poly(a),
        Command::Verify { suite, dmax } => cmd_verify(suite, *dmax, cli.oracle_cap),
        Command::Table { d, m, k } => cmd_table(*d, *m, k),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: cannot start {n} workers: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print(&out, cli.format);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { 2 } else { 1 })
        }
    }
}
