//! Command implementations and report payloads.

use serde::Serialize;

use yhw_core::rat::Rat;
use yhw_core::rep::{
    berezinian_action, check_defining_relations, cyclic_highest_module, irreducible_quotient,
    verify_key_relations, verify_odd_reflection, YangianRep, DEFAULT_MAX_DIM,
};
use yhw_core::sample::{random_kac_tensor, random_vector_tensor, rng_from_seed};
use yhw_core::{
    decide_finite_dimensional, odd_reflect, Decision, Error as CoreError, HighestWeight, ParitySeq,
    ReflectionStep, TruncatedSeries,
};

use crate::job::JobSpec;
use crate::CliError;

#[derive(Serialize)]
pub struct DecidePayload {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist: Option<Vec<Rat>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<Decision>,
}

pub fn run_decide(job: &JobSpec) -> Result<DecidePayload, CliError> {
    let sigma = job.parity()?;
    let (weight, twist) = match job.weight(sigma.len()) {
        Ok(ok) => ok,
        // Step (i) of the decision rule: a component that cannot be put in
        // rational polynomial form means the module is infinite-dimensional.
        Err(CliError::NonRational(msg)) => {
            return Ok(DecidePayload {
                verdict: "infinite_dimensional",
                reason: Some(format!("non-rational component: {}", msg)),
                twist: None,
                decision: None,
            });
        }
        Err(e) => return Err(e),
    };
    let decision = decide_finite_dimensional(&sigma, &weight).map_err(CliError::from_core)?;
    Ok(DecidePayload {
        verdict: verdict_str(&decision),
        reason: None,
        twist,
        decision: Some(decision),
    })
}

fn verdict_str(decision: &Decision) -> &'static str {
    match decision.verdict {
        yhw_core::Verdict::FiniteDimensional => "finite_dimensional",
        yhw_core::Verdict::InfiniteDimensional => "infinite_dimensional",
    }
}

#[derive(Serialize)]
pub struct ReflectPayload {
    pub parity_out: ParitySeq,
    pub weight_out: HighestWeight,
    pub step: ReflectionStep,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist: Option<Vec<Rat>>,
}

pub fn run_reflect(job: &JobSpec) -> Result<ReflectPayload, CliError> {
    let sigma = job.parity()?;
    let (weight, twist) = job.weight(sigma.len())?;
    let index = job.reflection_index()?;
    let (parity_out, weight_out, step) =
        odd_reflect(&sigma, &weight, index).map_err(CliError::from_core)?;
    Ok(ReflectPayload {
        parity_out,
        weight_out,
        step,
        twist,
    })
}

#[derive(Serialize)]
pub struct ChainPayload {
    pub indices: Vec<usize>,
    pub standard_parity: ParitySeq,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_out: Option<HighestWeight>,
}

pub fn run_chain(job: &JobSpec) -> Result<ChainPayload, CliError> {
    let sigma = job.parity()?;
    let indices = sigma.chain_to_standard();
    let mut standard = sigma.clone();
    let mut weight_out = None;
    if job.weights.is_some() {
        let (mut weight, _) = job.weight(sigma.len())?;
        let mut cur = sigma;
        for &i in &indices {
            let (s, w, _) = odd_reflect(&cur, &weight, i).map_err(CliError::from_core)?;
            cur = s;
            weight = w;
        }
        standard = cur;
        weight_out = Some(weight);
    } else {
        for &i in &indices {
            standard = standard.swapped(i);
        }
    }
    Ok(ChainPayload {
        indices,
        standard_parity: standard,
        weight_out,
    })
}

#[derive(Serialize)]
pub struct VerifyInstance {
    pub seed: u64,
    pub ok: bool,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize)]
pub struct VerifyPayload {
    pub family: String,
    pub count: usize,
    pub seed: u64,
    pub passes: usize,
    pub failures: usize,
    pub instances: Vec<VerifyInstance>,
}

pub fn run_verify(job: &JobSpec) -> Result<VerifyPayload, CliError> {
    let family = job
        .family
        .as_deref()
        .ok_or_else(|| CliError::input("missing field: family".into()))?;
    let count = job.count.unwrap_or(5);
    let seed = job.seed.unwrap_or(0);
    let cap = job.max_dim.unwrap_or(DEFAULT_MAX_DIM);
    let level = job.level.unwrap_or(2);
    if level == 0 {
        return Err(CliError::input("level must be at least 1".into()));
    }

    let mut instances = Vec::with_capacity(count);
    for i in 0..count {
        let instance_seed = seed.wrapping_add(i as u64);
        let mut rng = rng_from_seed(instance_seed);
        let outcome: Result<(bool, usize, Option<String>), CoreError> = match family {
            "rtt" => {
                let sigma: ParitySeq = job
                    .parity
                    .as_deref()
                    .unwrap_or("101")
                    .parse()
                    .map_err(CliError::from_core)?;
                let factors = job.factors.unwrap_or(2);
                let explicit = job.shifts()?;
                (|| {
                    let rep = match &explicit {
                        Some(shifts) => vector_tensor_with_shifts(&sigma, shifts, cap)?,
                        None => random_vector_tensor(&mut rng, &sigma, factors, cap)?,
                    };
                    let report = check_defining_relations(&rep);
                    let detail = report
                        .first_violation
                        .as_ref()
                        .map(|v| format!("violation at {:?}", v));
                    Ok((report.ok, rep.dim(), detail))
                })()
            }
            "prop42" => (|| {
                let sigma: ParitySeq = "01".parse().unwrap();
                let raw = random_kac_tensor(&mut rng, &sigma, level, cap)?;
                let rep = irreducible_quotient(&raw)?;
                let report = verify_key_relations(&rep)?;
                let detail = (!report.ok()).then(|| format!("{:?}", report));
                Ok((report.ok(), rep.dim(), detail))
            })(),
            "reflection" => {
                let sigma: ParitySeq = job
                    .parity
                    .as_deref()
                    .unwrap_or("101")
                    .parse()
                    .map_err(CliError::from_core)?;
                let Some(index) = sigma.first_descent() else {
                    return Err(CliError::input(
                        "reflection family needs a parity with a 10 pair".into(),
                    ));
                };
                (|| {
                    let raw = if sigma.len() == 2 {
                        random_kac_tensor(&mut rng, &sigma, level, cap)?
                    } else {
                        random_vector_tensor(&mut rng, &sigma, level, cap)?
                    };
                    let rep = irreducible_quotient(&raw)?;
                    let report = verify_odd_reflection(&rep, index)?;
                    // Double reflection must restore the data exactly.
                    let weight = cyclic_highest_module(&rep)?.weight;
                    let (s2, w2, _) = odd_reflect(rep.sigma(), &weight, index)?;
                    let (s3, w3, _) = odd_reflect(&s2, &w2, index)?;
                    let involution = s3 == *rep.sigma() && w3 == weight;
                    let ok = report.ok() && involution;
                    let detail = (!ok).then(|| format!("{:?}", report));
                    Ok((ok, rep.dim(), detail))
                })()
            }
            "berezinian" => (|| {
                let sigma: ParitySeq = "01".parse().unwrap();
                let order = job.order.unwrap_or(2 * level + 2);
                let rep = random_kac_tensor(&mut rng, &sigma, level, cap)?;
                let report = berezinian_action(&rep, order)?;
                let detail = (!report.ok()).then(|| {
                    format!(
                        "central={} scalar_match={}",
                        report.central, report.scalar_match
                    )
                });
                Ok((report.ok(), rep.dim(), detail))
            })(),
            other => {
                return Err(CliError::input(format!(
                    "unknown family {:?} (expected rtt, prop42, reflection, berezinian)",
                    other
                )))
            }
        };
        let (ok, dim, detail) = outcome.map_err(CliError::from_core)?;
        instances.push(VerifyInstance {
            seed: instance_seed,
            ok,
            dim,
            detail,
        });
    }
    let passes = instances.iter().filter(|i| i.ok).count();
    Ok(VerifyPayload {
        family: family.to_string(),
        count,
        seed,
        passes,
        failures: count - passes,
        instances,
    })
}

#[derive(Serialize)]
pub struct BerezinianPayload {
    pub order: usize,
    pub central: bool,
    pub scalar_match: bool,
    pub scalar_series: TruncatedSeries,
    pub module_dim: usize,
    pub b_coeffs: Vec<Vec<Vec<Rat>>>,
}

/// Build a highest-weight module realizing the requested 1|1 weight as a
/// tensor of two-dimensional factors (one-dimensional where a root is
/// shared), then compute the central series on it.
pub fn run_berezinian(job: &JobSpec) -> Result<BerezinianPayload, CliError> {
    let sigma = job.parity()?;
    if sigma.len() != 2 || sigma.bit(1) != 0 || sigma.bit(2) != 1 {
        return Err(CliError::input(
            "the central series front end works over parity 01".into(),
        ));
    }
    let (weight, _) = job.weight(2)?;
    let level = weight.level();
    if level == 0 {
        return Err(CliError::input("level must be at least 1".into()));
    }
    let order = job.order.unwrap_or(2 * level + 2);
    let cap = job.max_dim.unwrap_or(DEFAULT_MAX_DIM);

    let alphas: Vec<Rat> = weight.component(1).roots().iter().cloned().collect();
    let betas: Vec<Rat> = weight.component(2).roots().iter().cloned().collect();
    let mut rep: Option<YangianRep> = None;
    for (a, b) in alphas.into_iter().zip(betas) {
        let factor =
            YangianRep::kac_module(&sigma, &(a, -b), &Rat::zero()).map_err(CliError::from_core)?;
        rep = Some(match rep {
            None => factor,
            Some(r) => r.tensor(&factor, cap).map_err(CliError::from_core)?,
        });
    }
    let rep = rep.expect("level >= 1");
    let realized = cyclic_highest_module(&rep).map_err(CliError::from_core)?;
    if realized.weight != weight {
        return Err(CliError::internal(format!(
            "realized weight {:?} differs from requested {:?}",
            realized.weight, weight
        )));
    }
    let report = berezinian_action(&rep, order).map_err(CliError::from_core)?;
    Ok(BerezinianPayload {
        order,
        central: report.central,
        scalar_match: report.scalar_match,
        scalar_series: report.scalar_series,
        module_dim: rep.dim(),
        b_coeffs: report
            .b_coeffs
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|r| m.row_slice(r).to_vec())
                    .collect::<Vec<_>>()
            })
            .collect(),
    })
}

fn vector_tensor_with_shifts(
    sigma: &ParitySeq,
    shifts: &[Rat],
    cap: usize,
) -> Result<YangianRep, CoreError> {
    let mut rep: Option<YangianRep> = None;
    for a in shifts {
        let factor = YangianRep::vector_module(sigma, a);
        rep = Some(match rep {
            None => factor,
            Some(r) => r.tensor(&factor, cap)?,
        });
    }
    rep.ok_or_else(|| CoreError::Shape("at least one shift is required".into()))
}
