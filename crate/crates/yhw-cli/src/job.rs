//! Job descriptions: the JSON input format and its validation.
//!
//! Rationals are strings ("5", "-3/2"), parities are 0/1 strings, weight
//! components are either explicit root lists or ratios of polynomials in
//! `u^{-1}` given by ascending coefficient lists with constant term 1. The
//! schema shipped in `docs/jobspec.schema.json` mirrors exactly what this
//! parser accepts.

use serde::{Deserialize, Serialize};

use yhw_core::rat::Rat;
use yhw_core::weight::normalize_twist;
use yhw_core::{HighestWeight, MonicPoly, ParitySeq};

use crate::CliError;

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightSpec>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shifts: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_dim: Option<usize>,
}

/// One weight component: exactly one of the two forms.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub num_coeffs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub den_coeffs: Option<Vec<String>>,
}

impl JobSpec {
    pub fn parse(data: &str) -> Result<JobSpec, CliError> {
        serde_json::from_str(data).map_err(|e| CliError::input(format!("invalid job: {}", e)))
    }

    /// The JSON `command` field, when present, must agree with the invoked
    /// subcommand.
    pub fn check_command(&self, subcommand: &str) -> Result<(), CliError> {
        match &self.command {
            Some(c) if c != subcommand => Err(CliError::input(format!(
                "job command {:?} does not match subcommand {:?}",
                c, subcommand
            ))),
            _ => Ok(()),
        }
    }

    pub fn parity(&self) -> Result<ParitySeq, CliError> {
        let s = self
            .parity
            .as_deref()
            .ok_or_else(|| CliError::input("missing field: parity".into()))?;
        s.parse()
            .map_err(|e| CliError::input(format!("invalid parity: {}", e)))
    }

    pub fn reflection_index(&self) -> Result<usize, CliError> {
        self.index
            .ok_or_else(|| CliError::input("missing field: index".into()))
    }

    /// Assemble the highest weight. Root-form components of a common degree
    /// are taken directly; anything else goes through denominator clearing,
    /// returning the twist series that was applied.
    pub fn weight(&self, parity_len: usize) -> Result<(HighestWeight, Option<Vec<Rat>>), CliError> {
        let specs = self
            .weights
            .as_ref()
            .ok_or_else(|| CliError::input("missing field: weights".into()))?;
        if specs.len() != parity_len {
            return Err(CliError::input(format!(
                "parity length {} vs {} weight components",
                parity_len,
                specs.len()
            )));
        }
        let mut parsed: Vec<ComponentForm> = Vec::with_capacity(specs.len());
        for (idx, w) in specs.iter().enumerate() {
            parsed.push(ComponentForm::parse(w, idx + 1)?);
        }

        let all_roots: Option<Vec<&Vec<Rat>>> = parsed
            .iter()
            .map(|c| match c {
                ComponentForm::Roots(r) => Some(r),
                ComponentForm::Ratio { .. } => None,
            })
            .collect();
        if let Some(roots) = all_roots {
            let degree = roots[0].len();
            if roots.iter().all(|r| r.len() == degree) {
                if let Some(level) = self.level {
                    if level != degree {
                        return Err(CliError::input(format!(
                            "level {} does not match component degree {}",
                            level, degree
                        )));
                    }
                }
                let components = roots
                    .into_iter()
                    .map(|r| MonicPoly::from_root_values(r.clone()))
                    .collect();
                let weight = HighestWeight::new(degree, components)
                    .map_err(|e| CliError::input(e.to_string()))?;
                return Ok((weight, None));
            }
        }

        // General path: clear denominators over all components.
        let ratios: Vec<(Vec<Rat>, Vec<Rat>)> =
            parsed.into_iter().map(ComponentForm::into_ratio).collect();
        let (weight, twist) = normalize_twist(&ratios).map_err(CliError::from_core)?;
        if let Some(level) = self.level {
            if level != weight.level() {
                return Err(CliError::input(format!(
                    "level {} does not match normalized degree {}",
                    level,
                    weight.level()
                )));
            }
        }
        Ok((weight, Some(twist)))
    }
}

enum ComponentForm {
    Roots(Vec<Rat>),
    Ratio { num: Vec<Rat>, den: Vec<Rat> },
}

impl ComponentForm {
    fn parse(spec: &WeightSpec, position: usize) -> Result<ComponentForm, CliError> {
        match (&spec.roots, &spec.num_coeffs, &spec.den_coeffs) {
            (Some(roots), None, None) => Ok(ComponentForm::Roots(parse_rats(roots, position)?)),
            (None, Some(num), den) => {
                let den = match den {
                    Some(d) => parse_rats(d, position)?,
                    None => vec![Rat::one()],
                };
                Ok(ComponentForm::Ratio {
                    num: parse_rats(num, position)?,
                    den,
                })
            }
            (None, None, Some(_)) => Err(CliError::input(format!(
                "component {}: den_coeffs without num_coeffs",
                position
            ))),
            (None, None, None) => Err(CliError::input(format!(
                "component {}: provide roots or num_coeffs/den_coeffs",
                position
            ))),
            _ => Err(CliError::input(format!(
                "component {}: roots and coefficient forms are mutually exclusive",
                position
            ))),
        }
    }

    fn into_ratio(self) -> (Vec<Rat>, Vec<Rat>) {
        match self {
            ComponentForm::Ratio { num, den } => (num, den),
            ComponentForm::Roots(roots) => {
                // prod (u + r) of degree p corresponds to prod (1 + r u^{-1}):
                // the reversed coefficient vector.
                let mut coeffs = MonicPoly::from_root_values(roots).coeffs();
                coeffs.reverse();
                (coeffs, vec![Rat::one()])
            }
        }
    }
}

fn parse_rats(values: &[String], position: usize) -> Result<Vec<Rat>, CliError> {
    values
        .iter()
        .map(|s| {
            s.parse()
                .map_err(|e| CliError::input(format!("component {}: {}", position, e)))
        })
        .collect()
}

impl JobSpec {
    /// Explicit evaluation shifts, when given.
    pub fn shifts(&self) -> Result<Option<Vec<Rat>>, CliError> {
        match &self.shifts {
            None => Ok(None),
            Some(raw) => raw
                .iter()
                .map(|s| {
                    s.parse()
                        .map_err(|e| CliError::input(format!("invalid shift: {}", e)))
                })
                .collect::<Result<Vec<Rat>, CliError>>()
                .map(Some),
        }
    }
}
