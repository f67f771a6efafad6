use serde_json::json;

use freeprob::boxconv::{self, GroupElement};
use freeprob::hopf::{self, GenPolynomial};
use freeprob::ncpart::{enumerate_nc, kreweras, NcPartition};
use freeprob::probmodel;
use freeprob::rep;
use freeprob::ring::{Coeff, ModP, Rational, RingDescriptor};
use freeprob::verify::{self, VerifyConfig};
use freeprob::wittlog;
use freeprob::{io, Error};

use crate::inputs::{detect_ring, parse_groups, parse_names, parse_word, read_file, CliError, CliResult, Ctx};
use crate::{Cli, Command};

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string(&v).expect("serializable")
}

/// Inputs whose ring decides the coefficient type.
fn ring_inputs(cmd: &Command) -> Vec<&str> {
    use Command::*;
    match cmd {
        BoxConv { f, g } | FreeAdd { f, g } | FreeMul { f, g } | WittMul { f, g } => vec![f, g],
        FreeProduct { d1, d2 } => vec![d1, d2],
        HadamardMul { l1, l2 } | CircledAst { l1, l2 } => vec![l1, l2],
        BoxInv { f } | M2c { f } | C2m { f } | Ghost { f } | STransform { f, .. } => vec![f],
        Law { law } | STransform1d { law } | Log { law } | Exp { law } => vec![law],
        Cumulants { d } | CheckFree { d, .. } | VerifyS { d, .. } => vec![d],
        Moments { c } => vec![c],
        _ => Vec::new(),
    }
}

pub fn run(cli: &Cli) -> CliResult<String> {
    let global = &cli.global;
    match &cli.command {
        Command::NcEnum { n } => {
            let parts: Vec<String> = enumerate_nc(*n)?.iter().map(NcPartition::to_string).collect();
            Ok(pretty(json!({"n": n, "count": parts.len(), "partitions": parts})))
        }
        Command::Kreweras { partition } => {
            let p: NcPartition = partition.parse().map_err(|e: Error| CliError::usage(e.to_string()))?;
            Ok(pretty(json!({"partition": p.to_string(), "kreweras": kreweras(&p).to_string()})))
        }
        Command::Coproduct { word } => {
            let w = parse_word(word)?;
            let s = global.s.unwrap_or(w.max_letter() as usize);
            let t = hopf::coproduct(s, &w)?;
            Ok(pretty(json!({"s": s, "word": w.letters(), "coproduct": t.to_string()})))
        }
        Command::Antipode { word } => {
            let w = parse_word(word)?;
            let s = global.s.unwrap_or(w.max_letter() as usize);
            Ok(io::polynomial_to_json(&hopf::antipode(s, &w)?))
        }
        Command::Counit { polynomial } => {
            let p: GenPolynomial = if std::path::Path::new(polynomial).is_file() {
                io::polynomial_from_json(&read_file(polynomial)?)?
            } else {
                polynomial.parse()?
            };
            Ok(pretty(json!({"polynomial": p.to_string(), "counit": hopf::counit(&p).to_string()})))
        }
        Command::HopfCheck => {
            let s = global.s.unwrap_or(1);
            let order = global.order.ok_or_else(|| CliError::usage("hopf-check needs --order"))?;
            let r = hopf::hopf_axiom_check(order, s)?;
            let text = pretty(json!({
                "s": s,
                "order": order,
                "generators_checked": r.generators_checked,
                "identities_checked": r.identities_checked,
                "passed": r.passed(),
                "failures": r.failures,
            }));
            if r.passed() {
                Ok(text)
            } else {
                Err(CliError { output: Some(text), ..CliError::new("check-failed", "Hopf axioms fail") })
            }
        }
        Command::Verify { suite, only } => {
            if suite != "paper-props" {
                return Err(CliError::usage(format!("unknown suite `{suite}`")));
            }
            let config = VerifyConfig {
                seed: global.seed.unwrap_or(verify::DEFAULT_SEED),
                order: global.order.unwrap_or(5),
            };
            let reports = match only {
                Some(id) if (1..=11).contains(id) => vec![verify::run_criterion(*id, &config)],
                Some(id) => return Err(CliError::usage(format!("no criterion {id}"))),
                None => verify::run_all(&config),
            };
            let text: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            let failed: Vec<u8> = reports.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
            let text = text.join("\n");
            if failed.is_empty() {
                Ok(text)
            } else {
                Err(CliError { output: Some(text), ..CliError::new("check-failed", format!("criteria {failed:?} fail")) })
            }
        }
        cmd => {
            let ring = detect_ring(global, &ring_inputs(cmd))?;
            let ctx = Ctx { ring, global };
            match ring {
                RingDescriptor::Rational => execute::<Rational>(cmd, &ctx),
                RingDescriptor::ModP(_) => execute::<ModP>(cmd, &ctx),
            }
        }
    }
}

fn execute<R: Coeff>(cmd: &Command, ctx: &Ctx) -> CliResult<String> {
    use Command::*;
    let out = match cmd {
        BoxConv { f, g } => io::series_to_json(&boxconv::box_conv(&ctx.series::<R>(f)?, &ctx.series::<R>(g)?)?),
        BoxInv { f } => {
            let f = GroupElement::new(ctx.series::<R>(f)?)?;
            io::series_to_json(boxconv::box_inverse(&f)?.series())
        }
        Zeta | Moeb => {
            let s = ctx.global.s.unwrap_or(1);
            let order = ctx.order("zeta and moeb")?;
            let f = if matches!(cmd, Zeta) {
                boxconv::zeta_series::<R>(s, order, ctx.ring)?
            } else {
                boxconv::moeb_series::<R>(s, order, ctx.ring)?
            };
            io::series_to_json(&f)
        }
        FreeAdd { f, g } => io::series_to_json(&boxconv::free_add(&ctx.series::<R>(f)?, &ctx.series::<R>(g)?)?),
        FreeMul { f, g } => io::series_to_json(&boxconv::free_mul(&ctx.series::<R>(f)?, &ctx.series::<R>(g)?)?),
        M2c { f } => io::series_to_json(&boxconv::cumulants_from_moments(&ctx.series::<R>(f)?)?),
        C2m { f } => io::series_to_json(&boxconv::moments_from_cumulants(&ctx.series::<R>(f)?)?),
        Law { law } => io::distribution_to_json(&ctx.distribution::<R>(law)?),
        FreeProduct { d1, d2 } => {
            io::distribution_to_json(&probmodel::free_product(&ctx.distribution::<R>(d1)?, &ctx.distribution::<R>(d2)?)?)
        }
        Cumulants { d } => io::cumulants_to_json(&probmodel::cumulants_of(&ctx.distribution::<R>(d)?)?),
        Moments { c } => io::distribution_to_json(&probmodel::moments_of(&ctx.cumulants::<R>(c)?)?),
        CheckFree { d, groups } => {
            let d = ctx.distribution::<R>(d)?;
            let groups = parse_groups(groups);
            let combinatorial = probmodel::is_combinatorially_free(&d, &groups)?;
            let defects = probmodel::centered_alternating_defects(&d, &groups, d.order())?;
            let listed: Vec<_> = defects
                .iter()
                .map(|(w, v)| json!({"word": w.letters(), "value": v.to_string()}))
                .collect();
            pretty(json!({
                "groups": groups,
                "combinatorially_free": combinatorial,
                "classically_free": defects.is_empty(),
                "defects": listed,
            }))
        }
        HadamardMul { l1, l2 } => io::law_to_json(&wittlog::hadamard_box(&ctx.law::<R>(l1)?, &ctx.law::<R>(l2)?)?)?,
        STransform1d { law } => io::power_series_to_json(&wittlog::s_transform(&ctx.law::<R>(law)?)?),
        Ghost { f } => io::power_series_to_json(&wittlog::ghost(&ctx.lambda::<R>(f)?)?),
        WittMul { f, g } => io::lambda_to_json(&wittlog::witt_mul(&ctx.lambda::<R>(f)?, &ctx.lambda::<R>(g)?)?),
        Log { law } => io::law_to_json(&wittlog::log_iso(&ctx.law::<R>(law)?)?)?,
        Exp { law } => io::law_to_json(&wittlog::exp_iso(&ctx.law::<R>(law)?)?)?,
        CircledAst { l1, l2 } => io::law_to_json(&wittlog::circled_ast(&ctx.law::<R>(l1)?, &ctx.law::<R>(l2)?)?)?,
        STransform { f, n } => {
            let f = ctx.series::<R>(f)?;
            let s = f.s();
            let n = n.unwrap_or(f.order());
            io::matrix_to_json(&rep::s_transform(&GroupElement::new(f)?, n)?, s)
        }
        VerifyS { d, a, b, n } => {
            let d = ctx.distribution::<R>(d)?;
            let (a, b) = (parse_names(a), parse_names(b));
            let a: Vec<&str> = a.iter().map(String::as_str).collect();
            let b: Vec<&str> = b.iter().map(String::as_str).collect();
            let r = rep::verify_s_multiplicativity(&d, &a, &b, *n)?;
            let text = pretty(json!({"s": r.s, "order": r.order, "dimension": r.dimension, "holds": r.holds}));
            if !r.holds {
                return Err(CliError { output: Some(text), ..CliError::new("check-failed", "S(a⋆b) ≠ S(a)S(b)") });
            }
            text
        }
        NcEnum { .. } | Kreweras { .. } | Coproduct { .. } | Antipode { .. } | Counit { .. } | HopfCheck | Verify { .. } => {
            unreachable!("handled without a ring")
        }
    };
    Ok(out)
}
