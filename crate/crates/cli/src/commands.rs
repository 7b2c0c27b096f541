use std::io::Write;
use std::process::ExitCode;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use modsym_core::enumerate::{
    format_tuple, gen_cycle_perms, gen_lattice_paths, gen_nested_minset_tuples,
    gen_partitions_bounded, gen_partitions_mod, gen_permutations, gen_set_partitions, gen_tilings,
};
use modsym_core::identities::{
    mutation_self_test, verify as run_verify, IdentityCase, IdentityId, Profile, Ranges,
    VerifyReport,
};
use modsym_core::stirling::{Family, Triangle};
use modsym_core::symfun::{
    bounded_elem_sym, comp_sym, elem_sym, eval_bounded_elem_sym, eval_comp_sym, eval_elem_sym,
    eval_lmodular_sym, eval_modular_sym, lmodular_sym, modular_sym, Method,
};
use modsym_core::Polynomial;

use crate::output::{self, csv_field, Format, ObjectStream};
use crate::{CliError, EnumerateArgs, EvalArgs, TableArgs, VerifyArgs};

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn pick(pos: Option<String>, flag: Option<String>, what: &str) -> Result<String> {
    pos.or(flag).ok_or_else(|| usage(format!("missing {what}")))
}

fn required<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| usage(format!("--{flag} is required here")))
}

pub fn table(a: TableArgs) -> Result<ExitCode> {
    let family: Family = pick(a.family_pos, a.family, "family")?.parse()?;
    let t = Triangle::build(family, a.s, a.n_max)?;
    let mut out = output::open(a.out.output.as_deref())?;
    let body = match a.out.format.unwrap_or(Format::Text) {
        Format::Text => t.to_text(),
        Format::Csv => t.to_csv(),
        Format::Json => t.to_json() + "\n",
    };
    out.write_all(body.as_bytes())?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

enum Vars {
    Point(Vec<BigInt>),
    Symbolic(usize),
}

fn parse_vars(v: &str) -> Result<Vars> {
    if let Some(n) = v.strip_prefix("symbolic:") {
        let n = n
            .trim()
            .parse()
            .map_err(|_| usage(format!("bad variable count in '{v}'")))?;
        return Ok(Vars::Symbolic(n));
    }
    if v.trim().is_empty() {
        return Ok(Vars::Point(Vec::new()));
    }
    v.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| usage(format!("bad integer '{t}' in --vars")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Vars::Point)
}

enum Value {
    Int(BigInt),
    Poly(Polynomial),
}

pub fn eval(a: EvalArgs) -> Result<ExitCode> {
    let function = pick(a.function_pos, a.function, "function")?;
    let vars = parse_vars(&a.vars)?;
    let method: Option<Method> = a.method.as_deref().map(str::parse).transpose()?;
    if method.is_some() && function != "M" {
        return Err(usage("--method applies to M only"));
    }
    let k = a.k;
    let s_pos = || -> Result<usize> {
        let s = required(a.s, "s")?;
        if s == 0 {
            return Err(usage("s must be at least 1"));
        }
        Ok(s)
    };
    let value = match (function.as_str(), &vars) {
        ("e", Vars::Point(x)) => Value::Int(eval_elem_sym(x, k)),
        ("e", Vars::Symbolic(n)) => Value::Poly(elem_sym(*n, k)),
        ("h", Vars::Point(x)) => Value::Int(eval_comp_sym(x, k)),
        ("h", Vars::Symbolic(n)) => Value::Poly(comp_sym(*n, k)),
        ("E", Vars::Point(x)) => Value::Int(eval_bounded_elem_sym(x, k, s_pos()?)),
        ("E", Vars::Symbolic(n)) => Value::Poly(bounded_elem_sym(*n, k, s_pos()?)),
        ("M", Vars::Point(x)) => match method {
            None => Value::Int(eval_modular_sym(x, k, s_pos()?)),
            Some(m) => Value::Int(modular_sym(x.len(), k, s_pos()?, m).eval(x)?),
        },
        ("M", Vars::Symbolic(n)) => Value::Poly(modular_sym(
            *n,
            k,
            s_pos()?,
            method.unwrap_or(Method::Recurrence),
        )),
        ("Ml", Vars::Point(x)) => {
            Value::Int(eval_lmodular_sym(x, k, s_pos()?, required(a.ell, "ell")?)?)
        }
        ("Ml", Vars::Symbolic(n)) => {
            Value::Poly(lmodular_sym(*n, k, s_pos()?, required(a.ell, "ell")?)?)
        }
        (other, _) => {
            return Err(usage(format!(
                "unknown function '{other}' (expected M, E, e, h or Ml)"
            )))
        }
    };

    let mut out = output::open(a.out.output.as_deref())?;
    match (a.out.format.unwrap_or(Format::Text), &value) {
        (Format::Text, Value::Int(v)) => writeln!(out, "{v}")?,
        (Format::Text, Value::Poly(p)) => writeln!(out, "{p}")?,
        (Format::Csv, Value::Int(v)) => write!(out, "value\n{v}\n")?,
        (Format::Csv, Value::Poly(p)) => {
            writeln!(out, "coeff,monomial")?;
            for (m, c) in p.terms_desc() {
                writeln!(out, "{c},{}", csv_field(&m.to_string()))?;
            }
        }
        (Format::Json, v) => {
            let value = match v {
                Value::Int(i) => json!(i.to_string()),
                Value::Poly(p) => p.to_json(),
            };
            let doc = json!({
                "function": function,
                "k": k,
                "s": a.s,
                "ell": a.ell,
                "vars": a.vars,
                "value": value,
            });
            writeln!(out, "{doc}")?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn stream<T>(
    family: &str,
    format: Format,
    out: &mut dyn Write,
    items: impl Iterator<Item = T>,
    show: impl Fn(&T) -> String,
) -> Result<()> {
    let mut s = ObjectStream::start(out, format, family)?;
    for it in items {
        s.push(&show(&it))?;
    }
    s.finish()?;
    Ok(())
}

fn positive_s(s: Option<usize>) -> Result<usize> {
    let s = required(s, "s")?;
    if s == 0 {
        return Err(usage("s must be at least 1"));
    }
    Ok(s)
}

fn non_negative_k(k: Option<i64>) -> Result<usize> {
    let k = required(k, "k")?;
    usize::try_from(k).map_err(|_| usage(format!("k must be non-negative here, got {k}")))
}

pub fn enumerate(a: EnumerateArgs) -> Result<ExitCode> {
    let family = pick(a.family_pos, a.family, "family")?;
    let format = a.out.format.unwrap_or(Format::Text);
    // validate before touching the output file
    enum Job {
        Paths(usize, usize, usize),
        Tilings(usize, usize, usize),
        Partitions(usize, usize),
        PartitionsMod(usize, usize, usize),
        PartitionsBounded(usize, usize, usize),
        Perms(usize, Option<usize>),
        Nested(usize, i64, usize),
    }
    let need_n = || required(a.n, "n");
    let job = match family.as_str() {
        "paths" | "tilings" => {
            let (n, k, s) = (need_n()?, non_negative_k(a.k)?, positive_s(a.s)?);
            if n == 0 {
                return Err(usage("n must be at least 1"));
            }
            if family == "paths" {
                Job::Paths(n, k, s)
            } else {
                Job::Tilings(n, k, s)
            }
        }
        "partitions" | "partitions-mod" => {
            let (n, k) = (need_n()?, non_negative_k(a.k)?);
            if k > n {
                return Err(usage(format!("no partitions of [{n}] into {k} blocks")));
            }
            if family == "partitions" {
                Job::Partitions(n, k)
            } else {
                Job::PartitionsMod(n, k, positive_s(a.s)?)
            }
        }
        "partitions-bounded" => {
            let (board, blocks) = (required(a.board, "board")?, required(a.blocks, "blocks")?);
            if blocks > board {
                return Err(usage(format!("no partitions of [{board}] into {blocks} blocks")));
            }
            Job::PartitionsBounded(board, blocks, positive_s(a.s)?)
        }
        "perms" => {
            let n = need_n()?;
            let k = a.k.map(|_| non_negative_k(a.k)).transpose()?;
            if k.is_some_and(|k| k > n) {
                return Err(usage(format!("no permutations of [{n}] with {} cycles", k.unwrap())));
            }
            Job::Perms(n, k)
        }
        "nested-tuples" => Job::Nested(need_n()?, required(a.k, "k")?, positive_s(a.s)?),
        other => {
            return Err(usage(format!(
                "unknown family '{other}' (expected paths, tilings, partitions, partitions-mod, partitions-bounded, perms or nested-tuples)"
            )))
        }
    };

    let mut out = output::open(a.out.output.as_deref())?;
    let out: &mut dyn Write = &mut out;
    let f = family.as_str();
    match job {
        Job::Paths(n, k, s) => stream(
            f,
            format,
            out,
            gen_lattice_paths(n, k, s),
            ToString::to_string,
        )?,
        Job::Tilings(n, k, s) => stream(f, format, out, gen_tilings(n, k, s), ToString::to_string)?,
        Job::Partitions(n, k) => stream(
            f,
            format,
            out,
            gen_set_partitions(n, k),
            ToString::to_string,
        )?,
        Job::PartitionsMod(n, k, s) => stream(
            f,
            format,
            out,
            gen_partitions_mod(n, k, s),
            ToString::to_string,
        )?,
        Job::PartitionsBounded(b, m, s) => stream(
            f,
            format,
            out,
            gen_partitions_bounded(b, m, s),
            ToString::to_string,
        )?,
        Job::Perms(n, None) => stream(f, format, out, gen_permutations(n), ToString::to_string)?,
        Job::Perms(n, Some(k)) => {
            stream(f, format, out, gen_cycle_perms(n, k), ToString::to_string)?
        }
        Job::Nested(n, k, s) => stream(f, format, out, gen_nested_minset_tuples(n, k, s), |t| {
            format_tuple(t)
        })?,
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SeedCheck<'a> {
    mutation: String,
    identity: IdentityId,
    fail: usize,
    first_failure: Option<&'a IdentityCase>,
}

fn write_reports(
    out: &mut dyn Write,
    format: Format,
    reports: &[VerifyReport],
    single: bool,
) -> Result<()> {
    match format {
        Format::Json if single => writeln!(
            out,
            "{}",
            serde_json::to_string(&reports[0]).expect("serializable")
        )?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(reports).expect("serializable")
        )?,
        Format::Text | Format::Csv => {
            if format == Format::Csv {
                writeln!(out, "identity,pass,fail,skipped,errata")?;
            }
            for r in reports {
                if format == Format::Csv {
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        r.identity,
                        r.pass,
                        r.fail,
                        r.skipped,
                        r.errata.len()
                    )?;
                } else {
                    writeln!(
                        out,
                        "{:<11} pass {:>5}  fail {:>3}  skipped {:>4}{}",
                        r.identity.name(),
                        r.pass,
                        r.fail,
                        r.skipped,
                        if r.errata.is_empty() {
                            ""
                        } else {
                            "  (errata noted)"
                        }
                    )?;
                    for c in &r.failures {
                        writeln!(
                            out,
                            "  fail at {}: {} != {}",
                            c.params,
                            c.lhs.as_deref().unwrap_or(""),
                            c.rhs.as_deref().unwrap_or("")
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn verify(a: VerifyArgs) -> Result<ExitCode> {
    let format = a.out.format.unwrap_or(Format::Json);
    if a.seed_check {
        let results = mutation_self_test();
        let rows: Vec<SeedCheck> = results
            .iter()
            .map(|(m, r)| SeedCheck {
                mutation: m.to_string(),
                identity: r.identity,
                fail: r.fail,
                first_failure: r.failures.first(),
            })
            .collect();
        let mut out = output::open(a.out.output.as_deref())?;
        writeln!(
            out,
            "{}",
            serde_json::to_string(&rows).expect("serializable")
        )?;
        out.flush()?;
        let all_caught = rows.iter().all(|r| r.fail > 0);
        return Ok(if all_caught {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }

    let target = pick(a.id_pos, a.id, "identity id")?;
    let profile: Profile = a.profile.parse()?;
    let overrides = Ranges {
        n_max: a.n_max,
        k_max: a.k_max,
        s_max: a.s_max,
        p_list: a.p_list,
        ell: a.ell,
        board_max: a.board_max,
    };
    let single = !target.eq_ignore_ascii_case("all");
    let ids: Vec<IdentityId> = if single {
        vec![target.parse()?]
    } else {
        IdentityId::ALL.to_vec()
    };
    let reports = ids
        .into_iter()
        .map(|id| run_verify(id, &overrides.or(&profile.ranges(id))))
        .collect::<std::result::Result<Vec<_>, _>>()?;

    let mut out = output::open(a.out.output.as_deref())?;
    write_reports(&mut out, format, &reports, single)?;
    out.flush()?;
    let failures: usize = reports.iter().map(|r| r.fail).sum();
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
