use std::path::Path;

use concordance::covers::{ClassificationReport, HomologyOrder, KnotPolynomial};
use concordance::exactpoly::arith::{as_prime_power, distinct_prime_factors_u64};
use concordance::obstruction::{build_family, FamilyReport, Overrides};
use concordance::seifert::{self, torus_2q};
use concordance::signatures::{
    jump_step_check, signature_profile, tl_signature, verify_torus_lemma, ProfileEntry, UnitRootArg,
};
use concordance::{Error, IntPolynomial};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::input::{format_document, parse_delta, parse_document, read_source, MatrixDocument};
use crate::{num, Cli, CliError, Report};

fn load(input: Option<&Path>) -> Result<MatrixDocument, CliError> {
    let (text, name) = read_source(input)?;
    Ok(parse_document(&text, &name)?)
}

/// `--delta` when given, otherwise the Alexander polynomial of the input.
fn polynomial_source(cli: &Cli, input: Option<&Path>) -> Result<(String, IntPolynomial), CliError> {
    match &cli.delta {
        Some(s) => {
            let delta = parse_delta(s)?;
            KnotPolynomial::new(delta.clone())?;
            Ok(("delta".into(), delta))
        }
        None => {
            let doc = load(input)?;
            let delta = seifert::alexander(&doc.matrix);
            Ok((doc.name, delta))
        }
    }
}

fn coeff_json(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(num).collect())
}

fn coeff_text(p: &IntPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn order_json(o: &HomologyOrder) -> Value {
    match o {
        HomologyOrder::Finite(n) => num(n),
        HomologyOrder::Infinite => Value::from("inf"),
    }
}

pub fn alexander(_cli: &Cli, input: Option<&Path>) -> Result<Report, CliError> {
    let doc = load(input)?;
    let delta = seifert::alexander(&doc.matrix);
    let at_one = delta.eval_i64(1);
    let at_minus_one = delta.eval_i64(-1);
    let determinant: BigInt = at_minus_one.abs();
    let degree = delta.degree().unwrap_or(0);
    let json = json!({
        "name": doc.name,
        "dimension": doc.matrix.dim(),
        "genus": doc.matrix.genus(),
        "coefficients": coeff_json(&delta),
        "degree": degree,
        "delta_at_1": num(&at_one),
        "delta_at_minus_1": num(&at_minus_one),
        "determinant": num(&determinant),
    });
    let lines = vec![
        format!("name: {}", doc.name),
        format!("dimension: {}", doc.matrix.dim()),
        format!("alexander: {}", coeff_text(&delta)),
        format!("polynomial: {delta}"),
        format!("degree: {degree}"),
        format!("delta(1): {at_one}"),
        format!("delta(-1): {at_minus_one}"),
        format!("determinant: {determinant}"),
    ];
    Ok(Report { json, lines })
}

pub fn covers(cli: &Cli, input: Option<&Path>) -> Result<Report, CliError> {
    if cli.max_r < 2 {
        return Err(Error::OutOfRange {
            what: "max-r",
            min: 2,
            got: cli.max_r,
        }
        .into());
    }
    let (name, delta) = polynomial_source(cli, input)?;
    let kp = KnotPolynomial::new(delta.clone())?;
    let mut rows = Vec::new();
    let mut table = Vec::new();
    for r in 2..=cli.max_r {
        let order = kp.cover_order(r)?;
        let prime_power = as_prime_power(r).is_some();
        rows.push(json!({ "r": r, "order": order_json(&order), "prime_power": prime_power }));
        table.push((r, order.to_string(), prime_power));
    }
    let width = table
        .iter()
        .map(|(_, o, _)| o.len())
        .max()
        .unwrap_or(1)
        .max(5);
    let mut lines = vec![
        format!("name: {name}"),
        format!("alexander: {}", coeff_text(&delta)),
        format!("{:>4}  {:>width$}  prime-power", "r", "order"),
    ];
    for (r, order, pp) in table {
        lines.push(format!(
            "{r:>4}  {order:>width$}  {}",
            if pp { "yes" } else { "no" }
        ));
    }
    let json = json!({
        "name": name,
        "coefficients": coeff_json(&delta),
        "max_r": cli.max_r,
        "covers": rows,
    });
    Ok(Report { json, lines })
}

pub fn classification_json(c: &ClassificationReport) -> Value {
    let factors: Vec<Value> = c
        .cyclotomic_factors
        .iter()
        .map(|(n, m)| {
            let primes = distinct_prime_factors_u64(n.get());
            json!({
                "n": n.get(),
                "multiplicity": m,
                "primes": primes,
                "distinct_primes": primes.len(),
            })
        })
        .collect();
    let witness = match &c.witness_cover {
        Some((r, o)) => json!({ "r": r, "order": order_json(o) }),
        None => Value::Null,
    };
    json!({
        "cyclotomic_factors": factors,
        "remainder": coeff_json(&c.non_cyclotomic_remainder),
        "prime_power_covers_trivial": c.all_prime_power_covers_trivial,
        "all_covers_trivial": c.all_covers_trivial,
        "witness_cover": witness,
    })
}

pub fn classification_lines(c: &ClassificationReport) -> Vec<String> {
    let factors = if c.cyclotomic_factors.is_empty() {
        "none".to_string()
    } else {
        c.cyclotomic_factors
            .iter()
            .map(|(n, m)| {
                let primes = distinct_prime_factors_u64(n.get());
                let list: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
                format!(
                    "phi_{}^{} (primes {}; {} distinct)",
                    n.get(),
                    m,
                    list.join(" "),
                    primes.len()
                )
            })
            .collect::<Vec<_>>()
            .join(", ")
    };
    let witness = match &c.witness_cover {
        Some((r, o)) => format!("r={r} order={o}"),
        None => "none".into(),
    };
    vec![
        format!("cyclotomic factors: {factors}"),
        format!("remainder: {}", coeff_text(&c.non_cyclotomic_remainder)),
        format!(
            "prime-power covers trivial: {}",
            c.all_prime_power_covers_trivial
        ),
        format!("all covers trivial: {}", c.all_covers_trivial),
        format!("witness cover: {witness}"),
    ]
}

pub fn classify(cli: &Cli, input: Option<&Path>) -> Result<Report, CliError> {
    let (name, delta) = polynomial_source(cli, input)?;
    let c = concordance::covers::classify_prime_power_covers(&delta)?;
    let mut json = classification_json(&c);
    json["name"] = Value::from(name.clone());
    json["coefficients"] = coeff_json(&delta);
    let mut lines = vec![
        format!("name: {name}"),
        format!("alexander: {}", coeff_text(&delta)),
    ];
    lines.extend(classification_lines(&c));
    Ok(Report { json, lines })
}

fn entry_json(e: ProfileEntry) -> Value {
    match e {
        ProfileEntry::Value(v) => Value::from(v),
        ProfileEntry::Jump => Value::from("jump"),
    }
}

fn entry_text(e: ProfileEntry) -> String {
    match e {
        ProfileEntry::Value(v) => v.to_string(),
        ProfileEntry::Jump => "jump".into(),
    }
}

pub fn signature(cli: &Cli, input: Option<&Path>) -> Result<Report, CliError> {
    let q = cli
        .q
        .ok_or_else(|| CliError::usage("signature needs --q"))?;
    if q < 2 {
        return Err(Error::OutOfRange {
            what: "q",
            min: 2,
            got: q,
        }
        .into());
    }
    let doc = load(input)?;
    let profile = signature_profile(&doc.matrix, q)?;
    let entries: Vec<(u64, ProfileEntry)> = profile.iter().collect();
    let jumps: Vec<u64> = entries
        .iter()
        .filter(|(_, e)| matches!(e, ProfileEntry::Jump))
        .map(|(a, _)| *a)
        .collect();
    let mut json = json!({
        "name": doc.name,
        "q": q,
        "profile": entries.iter().map(|(a, e)| json!({ "a": a, "value": entry_json(*e) })).collect::<Vec<_>>(),
        "jumps": jumps,
    });
    let profile_text: Vec<String> = entries
        .iter()
        .map(|(a, e)| format!("{a}: {}", entry_text(*e)))
        .collect();
    let jump_text: Vec<String> = jumps.iter().map(|a| a.to_string()).collect();
    let mut lines = vec![
        format!("name: {}", doc.name),
        format!("q: {q}"),
        format!("profile: {}", profile_text.join(", ")),
        format!(
            "jumps: {}",
            if jumps.is_empty() {
                "none".into()
            } else {
                jump_text.join(", ")
            }
        ),
    ];
    if q % 2 == 0 || cli.minus_one {
        let m = match tl_signature(&doc.matrix, UnitRootArg::minus_one()) {
            Ok(v) => ProfileEntry::Value(v),
            Err(Error::JumpPoint { .. }) => ProfileEntry::Jump,
            Err(e) => return Err(e.into()),
        };
        json["sigma_minus_one"] = entry_json(m);
        lines.push(format!("sigma(-1): {}", entry_text(m)));
    }
    Ok(Report { json, lines })
}

pub fn torus(cli: &Cli, positional: Option<i64>) -> Result<Report, CliError> {
    let q = match (positional, cli.q) {
        (Some(q), _) => q,
        (None, Some(q)) => i64::try_from(q).map_err(|_| Error::BadTorusParameter(i64::MAX))?,
        (None, None) => return Err(CliError::usage("torus needs a parameter q")),
    };
    let matrix = torus_2q(q)?;
    let doc = MatrixDocument {
        name: format!("T(2,{q})"),
        matrix,
    };
    let rows: Vec<Value> = doc
        .matrix
        .rows()
        .iter()
        .map(|r| Value::Array(r.iter().map(num).collect()))
        .collect();
    let mut json = json!({ "name": doc.name, "matrix": rows });
    let mut lines: Vec<String> = format_document(&doc).lines().map(String::from).collect();
    if cli.verify {
        let q = q as u64;
        let lemma = verify_torus_lemma(q)?;
        let steps = jump_step_check(&doc.matrix, q)?;
        let step_json: Vec<Value> = steps
            .jumps
            .iter()
            .map(|j| {
                json!({
                    "at": j.at.to_string(),
                    "multiplicity": j.multiplicity,
                    "before": j.before,
                    "after": j.after,
                })
            })
            .collect();
        json["verification"] = json!({
            "lemma": {
                "min": lemma.min,
                "max": lemma.max,
                "sigma_minus_one": lemma.sigma_minus_one,
                "min_at_least_two": lemma.min_at_least_two,
                "no_jumps": lemma.no_jumps,
                "sigma_minus_one_is_q_minus_one": lemma.sigma_minus_one_is_q_minus_one,
                "holds": lemma.holds(),
            },
            "jump_steps": {
                "jumps": step_json,
                "cumulative_upper": steps.cumulative_upper,
                "simple_steps_are_two": steps.simple_steps_are_two,
                "cumulative_matches": steps.cumulative_matches,
                "holds": steps.holds(),
            },
        });
        let step_text: Vec<String> = steps
            .jumps
            .iter()
            .map(|j| format!("{} {:+}", j.at, j.step_ccw()))
            .collect();
        lines.push(format!(
            "# lemma: min {}, max {}, sigma(-1) {}, {}",
            lemma.min,
            lemma.max,
            lemma.sigma_minus_one,
            if lemma.holds() { "holds" } else { "fails" }
        ));
        lines.push(format!("# jumps: {}", step_text.join(", ")));
        lines.push(format!(
            "# cumulative upper-half step {}, {}",
            steps.cumulative_upper,
            if steps.holds() {
                "matches sigma(-1)"
            } else {
                "mismatch"
            }
        ));
    }
    Ok(Report { json, lines })
}

fn family_json(name: &str, f: &FamilyReport) -> Value {
    let s = &f.schedule;
    let params = &s.params;
    let entries: Vec<Value> = s
        .entries
        .iter()
        .map(|e| json!({ "n": num(&e.n), "lo": num(&e.lo), "hi": num(&e.hi) }))
        .collect();
    let brute = match &f.separation.brute_force {
        Some(b) => json!({
            "assignments_per_side": b.assignments,
            "base_min": b.base_min,
            "base_max": b.base_max,
            "collisions": b.collisions,
        }),
        None => Value::Null,
    };
    json!({
        "name": name,
        "classification": classification_json(&f.classification),
        "cover": {
            "r": f.cover_degree,
            "p": params.p,
            "k": params.k,
            "order": order_json(&f.cover_order),
        },
        "q": params.q,
        "q_divides_order": f.q_divides_order,
        "torus": params.torus,
        "genus": params.genus,
        "terms": params.terms(),
        "n0": params.n0,
        "s_min": s.s_min,
        "s_max": s.s_max,
        "profile": s.profile,
        "schedule": entries,
        "separation": {
            "verified": true,
            "pairs_checked": f.separation.pairs_checked,
            "brute_force": brute,
        },
        "notes": [FamilyReport::SHARED_MATRIX_NOTE, FamilyReport::OVERAPPROXIMATION_NOTE],
    })
}

fn family_lines(name: &str, f: &FamilyReport) -> Vec<String> {
    let s = &f.schedule;
    let params = &s.params;
    let mut lines = vec![format!("name: {name}")];
    lines.extend(classification_lines(&f.classification));
    lines.push(format!(
        "cover: r={} (p={}, k={}) order={}",
        f.cover_degree, params.p, params.k, f.cover_order
    ));
    lines.push(format!(
        "q: {} (divides order: {}; torus T(2,{}))",
        params.q, f.q_divides_order, params.torus
    ));
    lines.push(format!(
        "genus: {}, terms per side L: {}",
        params.genus,
        params.terms()
    ));
    lines.push(format!("N0: {}", params.n0));
    let profile: Vec<String> = s.profile.iter().map(|v| v.to_string()).collect();
    lines.push(format!(
        "torus profile: {} (S_min {}, S_max {})",
        profile.join(" "),
        s.s_min,
        s.s_max
    ));
    let ns: Vec<String> = s.entries.iter().map(|e| e.n.to_string()).collect();
    lines.push(format!("schedule: {}", ns.join(" ")));
    for (i, e) in s.entries.iter().enumerate() {
        lines.push(format!(
            "  member {}: n={} range [{}, {}]",
            i + 1,
            e.n,
            e.lo,
            e.hi
        ));
    }
    let brute = match &f.separation.brute_force {
        Some(b) => format!(
            "; enumeration of {} assignments per side found {} collisions",
            b.assignments, b.collisions
        ),
        None => String::new(),
    };
    lines.push(format!(
        "separation: verified for {} pairs{brute}",
        f.separation.pairs_checked
    ));
    lines.push(format!("note: {}", FamilyReport::SHARED_MATRIX_NOTE));
    lines.push(format!("note: {}", FamilyReport::OVERAPPROXIMATION_NOTE));
    lines
}

pub fn witness(cli: &Cli, input: Option<&Path>) -> Result<Report, CliError> {
    let doc = load(input)?;
    let overrides = Overrides {
        p: cli.p,
        k: cli.k,
        q: cli.q,
    };
    let family = build_family(&doc.matrix, cli.n0, cli.count, &overrides)?;
    Ok(Report {
        json: family_json(&doc.name, &family),
        lines: family_lines(&doc.name, &family),
    })
}
