use std::fmt;

use cuspgate_core::atkin_lehner::{admissible_sign_assignments, al_fixed_point_exists, sign_divisor, ALElement};
use cuspgate_core::curve::{
    apply_transform_rational, count_points_mod_2, hasse_bound_check_at_2, two_torsion_points,
    two_torsion_structure, Point, Transform,
};
use cuspgate_core::cusp::{cuspidal_group_structure, divisor_order, is_principal_lenient, ogg_order, signed_cusp_sum};
use cuspgate_core::eta::{divisor_of_eta_quotient, ligozat_check, EtaExponents};
use cuspgate_core::gates::{gate, gate_pq_refined, gate_squarefree_congruence};
use cuspgate_core::search::{verify_z2z4_classification, Family};
use cuspgate_core::tate::{conductor_data, tate_algorithm};
use cuspgate_core::{CuspDivisor, Rat, SquarefreeLevel};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::args::{
    AlFixedArgs, AlSignsArgs, Command, CuspOrderArgs, CurveArgs, EtaArgs, FamilyArg, Format, GatePqArgs, LevelArgs,
    SearchArgs, TateArgs, Torsion2Args, TransformArgs,
};
use crate::parallel;
use crate::record::{self, big, coeffs, Output, OutputRecord};

#[derive(Debug)]
pub enum CommandError {
    Domain(cuspgate_core::Error),
    Csv(csv::Error),
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Domain(e) => write!(f, "{e}"),
            CommandError::Csv(e) => write!(f, "csv output: {e}"),
        }
    }
}

impl std::error::Error for CommandError {}

impl From<cuspgate_core::Error> for CommandError {
    fn from(e: cuspgate_core::Error) -> Self {
        CommandError::Domain(e)
    }
}

impl From<csv::Error> for CommandError {
    fn from(e: csv::Error) -> Self {
        CommandError::Csv(e)
    }
}

type Result<T> = std::result::Result<T, CommandError>;

fn record(subcommand: &'static str, input: Value, result: Value) -> Result<Output> {
    Ok(Output::Record(OutputRecord { subcommand, input, result }))
}

pub fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::CuspOrder(a) => cusp_order(a),
        Command::CuspGroup(a) => cusp_group(a),
        Command::EtaCheck(a) => eta_check(a),
        Command::EtaDivisor(a) => eta_divisor(a),
        Command::AlFixed(a) => al_fixed(a),
        Command::AlSigns(a) => al_signs(a),
        Command::Gate(a) => gate_cmd(a),
        Command::GatePq(a) => gate_pq(a),
        Command::Search(a) => search(a),
        Command::Tate(a) => tate(a),
        Command::Conductor(a) => conductor(a),
        Command::Torsion2(a) => torsion2(a),
        Command::CurveTransform(a) => curve_transform(a),
    }
}

fn signs_text(signs: &[cuspgate_core::Sign]) -> String {
    signs.iter().map(|s| s.as_char()).collect()
}

fn cusp_order(a: &CuspOrderArgs) -> Result<Output> {
    let level = SquarefreeLevel::new(a.level)?;
    let (w, input, closed) = match (&a.signs, &a.divisor) {
        (Some(signs), _) => {
            let w = signed_cusp_sum(&level, signs)?;
            let closed = ogg_order(&level, signs)?;
            (w, json!({ "level": a.level, "signs": signs_text(signs) }), Some(closed))
        }
        (None, Some(values)) => {
            let w = CuspDivisor::from_sorted_ints(&level, values)?;
            (w, json!({ "level": a.level, "divisor": values }), None)
        }
        (None, None) => unreachable!("clap requires --signs or --divisor"),
    };
    let order = divisor_order(&w)?;
    let mut result = json!({ "order": big(&order), "divisor": record::divisor(&w) });
    if let Some(c) = closed {
        result["closed_form"] = big(c);
    }
    record("cusp-order", input, result)
}

fn cusp_group(a: &LevelArgs) -> Result<Output> {
    let level = SquarefreeLevel::new(a.level)?;
    let invariants = cuspidal_group_structure(&level);
    let order: BigUint = invariants.iter().product();
    record(
        "cusp-group",
        json!({ "level": a.level }),
        json!({
            "cusps": level.num_cusps(),
            "invariants": invariants.iter().map(big).collect::<Vec<_>>(),
            "order": big(order),
        }),
    )
}

fn eta_input(a: &EtaArgs) -> Value {
    json!({ "level": a.level, "exponents": a.exponents.iter().map(big).collect::<Vec<_>>() })
}

fn eta_check(a: &EtaArgs) -> Result<Output> {
    let r = EtaExponents::new(a.level, a.exponents.clone())?;
    let v = ligozat_check(&r);
    record(
        "eta-check",
        eta_input(a),
        json!({
            "verdict": v.to_string(),
            "modular": v.is_modular(),
            "failed": v.failed.iter().map(|c| c.index()).collect::<Vec<_>>(),
        }),
    )
}

fn eta_divisor(a: &EtaArgs) -> Result<Output> {
    let r = EtaExponents::new(a.level, a.exponents.clone())?;
    let w = divisor_of_eta_quotient(&r)?;
    record(
        "eta-divisor",
        eta_input(a),
        json!({
            "divisor": record::divisor(&w),
            "degree": big(w.degree()),
            "principal": is_principal_lenient(&w),
            "modular": ligozat_check(&r).is_modular(),
        }),
    )
}

fn al_fixed(a: &AlFixedArgs) -> Result<Output> {
    let level = SquarefreeLevel::new(a.level)?;
    let w = ALElement::new(&level, a.r)?;
    let action = level
        .sorted_divisors()
        .into_iter()
        .map(|c| Ok(json!({ "from": c, "to": w.act(c)? })))
        .collect::<std::result::Result<Vec<_>, cuspgate_core::Error>>()?;
    record(
        "al-fixed",
        json!({ "level": a.level, "r": a.r }),
        json!({ "involution": w.to_string(), "fixed_point": al_fixed_point_exists(&w), "cusp_action": action }),
    )
}

fn al_signs(a: &AlSignsArgs) -> Result<Output> {
    let level = SquarefreeLevel::new(a.level)?;
    let assignments: Vec<String> = admissible_sign_assignments(&level).iter().map(|s| s.to_string()).collect();
    let mut input = json!({ "level": a.level });
    let mut result = json!({ "admissible": assignments });
    if let Some(factors) = &a.expand {
        let text: Vec<String> = factors.iter().map(|(r, s)| format!("{r}:{}", s.as_char())).collect();
        input["expand"] = json!(text.join(","));
        let w = sign_divisor(&level, factors)?;
        result["divisor"] = record::divisor(&w);
        result["degree"] = big(w.degree());
        if w.is_integral() && w.degree() == Rat::from_integer(0.into()) {
            result["order"] = big(divisor_order(&w)?);
        }
    }
    record("al-signs", input, result)
}

fn gate_cmd(a: &LevelArgs) -> Result<Output> {
    let v = gate(a.level)?;
    let mut result = record::verdict(&v);
    result["congruence_form"] = json!(gate_squarefree_congruence(a.level));
    record("gate", json!({ "level": a.level }), result)
}

fn gate_pq(a: &GatePqArgs) -> Result<Output> {
    let v = gate_pq_refined(a.p, a.q)?;
    record("gate-pq", json!({ "p": a.p, "q": a.q }), record::verdict(&v))
}

fn default_max(family: FamilyArg) -> u64 {
    match family {
        FamilyArg::NeumannSetzer => 100,
        FamilyArg::TwoP => 20,
        FamilyArg::EightP | FamilyArg::FourPq => 1000,
        FamilyArg::Z2z4 => 10_000,
    }
}

fn search(a: &SearchArgs) -> Result<Output> {
    let max = a.max.unwrap_or_else(|| default_max(a.family));
    let family = match a.family {
        FamilyArg::NeumannSetzer => Family::NeumannSetzer,
        FamilyArg::TwoP => Family::TwoP,
        FamilyArg::EightP => Family::EightP,
        FamilyArg::FourPq => Family::FourPq,
        FamilyArg::Z2z4 => return z2z4(a, max),
    };
    let mut input = json!({ "family": family.name(), "max": max });
    if family == Family::FourPq {
        input["difference"] = json!(a.difference);
    }
    let hits = parallel::search(family, max, a.difference, a.jobs.get())?;
    match a.format {
        Format::Csv => Ok(Output::Csv(record::hits_csv(&hits)?)),
        Format::Json => record(
            "search",
            input,
            json!({ "count": hits.len(), "hits": hits.iter().map(record::hit).collect::<Vec<_>>() }),
        ),
    }
}

fn z2z4(a: &SearchArgs, bound: u64) -> Result<Output> {
    let report = verify_z2z4_classification(bound)?;
    if a.format == Format::Csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["case", "model", "conductor", "two_torsion"])?;
        for s in &report.solutions {
            w.write_record([s.case.to_string(), s.model.to_string(), s.conductor.to_string(), s.two_torsion.to_string()])?;
        }
        return Ok(Output::Csv(w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?));
    }
    let solutions: Vec<Value> = report
        .solutions
        .iter()
        .map(|s| {
            json!({
                "case": s.case.to_string(),
                "model": coeffs(&s.model),
                "conductor": big(&s.conductor),
                "two_torsion": s.two_torsion.to_string(),
            })
        })
        .collect();
    let examined: Vec<Value> =
        report.examined.iter().map(|(c, n)| json!({ "case": c.to_string(), "candidates": n })).collect();
    record(
        "search",
        json!({ "family": "z2z4", "max": bound }),
        json!({
            "conductors": report.conductors().iter().map(big).collect::<Vec<_>>(),
            "solutions": solutions,
            "examined": examined,
        }),
    )
}

fn tate(a: &TateArgs) -> Result<Output> {
    let l = tate_algorithm(&a.curve, a.prime)?;
    record("tate", json!({ "curve": coeffs(&a.curve), "prime": a.prime }), record::tate(&l))
}

fn conductor(a: &CurveArgs) -> Result<Output> {
    let data = conductor_data(&a.curve)?;
    record(
        "conductor",
        json!({ "curve": coeffs(&a.curve) }),
        json!({
            "conductor": big(&data.conductor),
            "discriminant": big(a.curve.discriminant()),
            "minimal_discriminant": big(&data.minimal_discriminant),
            "local": data.local.iter().map(record::tate).collect::<Vec<_>>(),
        }),
    )
}

fn torsion2(a: &Torsion2Args) -> Result<Output> {
    let e = a.curve.clone().nonsingular()?;
    let points: Vec<Value> = two_torsion_points(&e).iter().map(record::point).collect();
    let mut input = json!({ "curve": coeffs(&e) });
    let mut result = json!({
        "structure": two_torsion_structure(&e).to_string(),
        "points": points,
    });
    let good_at_two = hasse_bound_check_at_2(&e, 1).is_ok();
    result["good_reduction_at_2"] = json!(good_at_two);
    if good_at_two {
        let minimal = tate_algorithm(&e, 2)?.model;
        result["points_mod_2"] = json!(count_points_mod_2(&minimal));
    }
    if let Some(claimed) = a.claimed {
        input["claimed"] = json!(claimed);
        result["claimed_fits"] = json!(hasse_bound_check_at_2(&e, claimed)?);
    }
    record("torsion2", input, result)
}

fn curve_transform(a: &TransformArgs) -> Result<Output> {
    let tr = Transform::new(a.u.clone(), a.r.clone(), a.s.clone(), a.t.clone())?;
    let source = a.curve.to_rational();
    let moved = apply_transform_rational(&source, &tr)?;
    let mut input = json!({
        "curve": coeffs(&a.curve),
        "u": big(&a.u), "r": big(&a.r), "s": big(&a.s), "t": big(&a.t),
    });
    let mut result = json!({
        "model": coeffs(&moved),
        "integral": moved.to_integral().is_ok(),
        "discriminant": big(moved.discriminant()),
    });
    if let Some(xy) = &a.point {
        let [x, y] = xy.as_slice() else {
            return Err(cuspgate_core::Error::Precondition("--point takes exactly two coordinates").into());
        };
        let p = Point::Affine(x.clone(), y.clone());
        input["point"] = record::point(&p);
        if !source.contains(&p) {
            return Err(cuspgate_core::Error::PointNotOnCurve.into());
        }
        result["point"] = record::point(&tr.map_point(&p));
    }
    record("curve-transform", input, result)
}
