//! Tabulation of the sequences for reports.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Signed;

use super::binomial::central_binomial_ratio_squared;
use super::integrals::{moment_integrals, wallis_integrals};
use super::variations::{term_from_partials, Limit, VariationId};
use super::wallis::{ProductForm, WallisPartials};
use crate::error::{invalid, Error, Result};
use crate::exact::decimal::{render_certified, truncate_decimal};
use crate::exact::{pi_enclosure, scalar_to_interval, Interval, PiScalar};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceName {
    WallisProduct,
    WallisIntegral,
    MomentIntegral,
    Variation(VariationId),
    BinomialRatio,
}

impl SequenceName {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::WallisProduct => "a_n",
            Self::WallisIntegral => "I_n",
            Self::MomentIntegral => "E_n",
            Self::Variation(v) => v.name(),
            Self::BinomialRatio => "binom_ratio",
        }
    }

    fn first_index(self) -> u64 {
        match self {
            Self::WallisIntegral | Self::MomentIntegral => 0,
            _ => 1,
        }
    }

    fn limit(self) -> Option<Limit> {
        match self {
            Self::WallisProduct => Some(Limit::Value(PiScalar::new(BigRational::new(1.into(), 2.into()), 2))),
            Self::Variation(v) => Some(v.limit()),
            Self::BinomialRatio => Some(Limit::Value(PiScalar::one())),
            Self::WallisIntegral | Self::MomentIntegral => None,
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a_n" => Ok(Self::WallisProduct),
            "I_n" => Ok(Self::WallisIntegral),
            "E_n" => Ok(Self::MomentIntegral),
            "binom_ratio" => Ok(Self::BinomialRatio),
            other => other
                .parse::<VariationId>()
                .map(Self::Variation)
                .map_err(|_| invalid(format!("unknown sequence `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqRow {
    pub n: u64,
    /// Lossless rendering: a reduced fraction or `q·π^(k/2)` form.
    pub exact: String,
    /// Value truncated toward zero.
    pub decimal: String,
    pub target: Option<String>,
    /// `|value − target|` in scientific notation.
    pub abs_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqTable {
    pub name: String,
    pub digits: u32,
    pub rows: Vec<SeqRow>,
}

enum Value {
    Scalar(PiScalar),
    Root(super::variations::VariationTerm),
}

impl Value {
    fn exact(&self) -> String {
        match self {
            Value::Scalar(x) => x.to_string(),
            Value::Root(t) => t.to_string(),
        }
    }

    fn render(&self, digits: u32) -> Result<(String, Interval<BigRational>)> {
        match self {
            Value::Scalar(x) if x.half_pi_power() == 0 => {
                Ok((truncate_decimal(x.coeff(), digits), Interval::point(x.coeff().clone())))
            }
            Value::Scalar(x) => render_certified(digits, |enc, _| Ok(scalar_to_interval(x, enc))),
            Value::Root(t) => render_certified(digits, |enc, work| t.to_interval(enc, work)),
        }
    }
}

fn abs_error(value: &Interval<BigRational>, target: &Interval<BigRational>) -> String {
    let diff = (value.midpoint() - target.midpoint()).abs();
    format!("{:.6e}", <f64 as Scalar>::from_rational(&diff))
}

/// Rows `n = first, first+step, …, ≤ max_n` of the named sequence.
pub fn sequence_table(seq: SequenceName, max_n: u64, step: u64, digits: u32) -> Result<SeqTable> {
    if max_n < 1 {
        return Err(invalid("max_n must be at least 1"));
    }
    if step < 1 {
        return Err(invalid("step must be at least 1"));
    }
    if digits < 1 {
        return Err(invalid("digits must be at least 1"));
    }
    let first = seq.first_index();
    let indices: Vec<u64> = (first..=max_n).step_by(step as usize).collect();

    let values: Vec<Value> = match seq {
        SequenceName::WallisIntegral => {
            let all = wallis_integrals(max_n);
            indices.iter().map(|&n| Value::Scalar(all[n as usize].clone())).collect()
        }
        SequenceName::MomentIntegral => {
            let all = moment_integrals(max_n);
            indices.iter().map(|&n| Value::Scalar(all[n as usize].clone())).collect()
        }
        SequenceName::BinomialRatio => indices
            .iter()
            .map(|&n| {
                let sq = central_binomial_ratio_squared(n);
                Value::Root(super::variations::VariationTerm {
                    rational: BigRational::from_integer(1.into()),
                    radicand: sq.coeff().clone(),
                    half_pi_power: 1,
                })
            })
            .collect(),
        SequenceName::WallisProduct | SequenceName::Variation(_) => {
            let mut p = WallisPartials::new();
            let mut out = Vec::with_capacity(indices.len());
            for &n in &indices {
                while p.n() < n {
                    p.advance();
                }
                out.push(match seq {
                    SequenceName::WallisProduct => Value::Scalar(PiScalar::rational(p.value(ProductForm::Paired))),
                    SequenceName::Variation(v) => Value::Root(term_from_partials(v, &p)),
                    _ => unreachable!(),
                });
            }
            out
        }
    };

    let limit = seq.limit();
    let target = match &limit {
        Some(l) => {
            let (text, _) = render_certified(digits, |enc, _| l.to_interval(enc))?;
            Some(text)
        }
        None => None,
    };
    let target_iv = match &limit {
        Some(l) => Some(l.to_interval(&pi_enclosure((digits + 10).min(1000))?)?),
        None => None,
    };

    let mut rows = Vec::with_capacity(values.len());
    for (n, v) in indices.into_iter().zip(values) {
        let (decimal, iv) = v.render(digits)?;
        rows.push(SeqRow {
            n,
            exact: v.exact(),
            decimal,
            target: target.clone(),
            abs_error: target_iv.as_ref().map(|t| abs_error(&iv, t)),
        });
    }
    Ok(SeqTable {
        name: seq.as_str().to_string(),
        digits,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wallis_rows() {
        let t = sequence_table(SequenceName::WallisProduct, 3, 1, 6).unwrap();
        let exact: Vec<&str> = t.rows.iter().map(|r| r.exact.as_str()).collect();
        assert_eq!(exact, vec!["4/3", "64/45", "256/175"]);
        assert_eq!(t.rows[2].decimal, "1.462857");
        assert_eq!(t.rows[0].target.as_deref(), Some("1.570796"));
    }

    #[test]
    fn moment_rows() {
        let t = sequence_table(SequenceName::MomentIntegral, 4, 1, 4).unwrap();
        assert_eq!(t.rows.len(), 5);
        assert_eq!(t.rows[4].exact, "3/8·√π");
        assert_eq!(t.rows[4].decimal, "0.6646");
        assert!(t.rows[4].target.is_none());
    }

    #[test]
    fn binomial_rows() {
        let t = sequence_table(SequenceName::BinomialRatio, 5, 1, 4).unwrap();
        assert_eq!(t.rows.last().unwrap().decimal, "0.9753");
        assert_eq!(t.rows[0].decimal, "0.8862");
    }

    #[test]
    fn variation_rows_with_step() {
        let t = sequence_table(SequenceName::Variation(VariationId::V4), 7, 3, 5).unwrap();
        let idx: Vec<u64> = t.rows.iter().map(|r| r.n).collect();
        assert_eq!(idx, vec![1, 4, 7]);
        assert_eq!(t.rows[0].exact, "3/4");
    }

    #[test]
    fn names() {
        assert_eq!("v3".parse::<SequenceName>().unwrap(), SequenceName::Variation(VariationId::V3));
        assert!("b_n".parse::<SequenceName>().is_err());
    }
}
