//! Partial products `a_n = Π_{k≤n} (2k/(2k−1))·(2k/(2k+1))` of the Wallis product.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use super::CancelToken;
use crate::error::{invalid, Error, Result};
use crate::exact::rational::{mul_small, square, FactorProduct};

/// The three algebraically equal ways of writing `a_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductForm {
    /// `(2/1)(2/3)(4/3)(4/5)···(2n/(2n−1))(2n/(2n+1))`
    Paired,
    /// `(2/1 · 4/3 ··· 2n/(2n−1))² / (2n+1)`
    SquaredOverOdd,
    /// `(2/3 · 4/5 ··· 2n/(2n+1))² · (2n+1)`
    SquaredTimesOdd,
}

impl ProductForm {
    pub const ALL: [ProductForm; 3] = [Self::Paired, Self::SquaredOverOdd, Self::SquaredTimesOdd];
}

impl FromStr for ProductForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paired" => Ok(Self::Paired),
            "squared-over-odd" => Ok(Self::SquaredOverOdd),
            "squared-times-odd" => Ok(Self::SquaredTimesOdd),
            _ => Err(invalid(format!("unknown product form `{s}`"))),
        }
    }
}

/// How the factors are multiplied together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ProductStrategy {
    /// Sequential below [`TREE_THRESHOLD`] terms, product tree above.
    #[default]
    Auto,
    /// Left-to-right accumulation, reduced after every factor.
    Sequential,
    /// Prime-exponent accumulation followed by balanced product trees.
    Tree,
}

pub const TREE_THRESHOLD: u64 = 10_000;

/// Running state for all three forms at once.
///
/// Holds `a_n`, `P_n = Π 2k/(2k−1)` and `Q_n = Π 2k/(2k+1)`; each form of
/// `a_n` is derived from its own accumulator.
#[derive(Debug, Clone)]
pub struct WallisPartials {
    n: u64,
    paired: BigRational,
    evens_over_odds: BigRational,
    evens_over_next_odds: BigRational,
}

impl Default for WallisPartials {
    fn default() -> Self {
        Self::new()
    }
}

impl WallisPartials {
    /// State at `n = 0` (the empty product).
    pub fn new() -> Self {
        Self {
            n: 0,
            paired: BigRational::one(),
            evens_over_odds: BigRational::one(),
            evens_over_next_odds: BigRational::one(),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Appends the factors for `n + 1`.
    pub fn advance(&mut self) {
        let k = self.n + 1;
        self.paired = mul_small(&self.paired, 2 * k, 2 * k - 1);
        self.paired = mul_small(&self.paired, 2 * k, 2 * k + 1);
        self.evens_over_odds = mul_small(&self.evens_over_odds, 2 * k, 2 * k - 1);
        self.evens_over_next_odds = mul_small(&self.evens_over_next_odds, 2 * k, 2 * k + 1);
        self.n = k;
    }

    /// `P_n = 2/1 · 4/3 ··· 2n/(2n−1)`.
    pub fn evens_over_odds(&self) -> &BigRational {
        &self.evens_over_odds
    }

    /// `Q_n = 2/3 · 4/5 ··· 2n/(2n+1)`.
    pub fn evens_over_next_odds(&self) -> &BigRational {
        &self.evens_over_next_odds
    }

    pub fn value(&self, form: ProductForm) -> BigRational {
        let odd = 2 * self.n + 1;
        match form {
            ProductForm::Paired => self.paired.clone(),
            ProductForm::SquaredOverOdd => mul_small(&square(&self.evens_over_odds), 1, odd),
            ProductForm::SquaredTimesOdd => mul_small(&square(&self.evens_over_next_odds), odd, 1),
        }
    }
}

fn sequential(n: u64, form: ProductForm, cancel: Option<&CancelToken>) -> Result<BigRational> {
    let mut acc = BigRational::one();
    for k in 1..=n {
        CancelToken::check(cancel)?;
        match form {
            ProductForm::Paired => {
                acc = mul_small(&acc, 2 * k, 2 * k - 1);
                acc = mul_small(&acc, 2 * k, 2 * k + 1);
            }
            ProductForm::SquaredOverOdd => acc = mul_small(&acc, 2 * k, 2 * k - 1),
            ProductForm::SquaredTimesOdd => acc = mul_small(&acc, 2 * k, 2 * k + 1),
        }
    }
    let odd = 2 * n + 1;
    Ok(match form {
        ProductForm::Paired => acc,
        ProductForm::SquaredOverOdd => mul_small(&square(&acc), 1, odd),
        ProductForm::SquaredTimesOdd => mul_small(&square(&acc), odd, 1),
    })
}

fn tree(n: u64, form: ProductForm, cancel: Option<&CancelToken>) -> Result<BigRational> {
    let limit = u32::try_from(2 * n + 1).map_err(|_| invalid("n too large for the product tree"))?;
    let mut f = FactorProduct::new(limit);
    for k in 1..=n as u32 {
        if k % 1024 == 0 {
            CancelToken::check(cancel)?;
        }
        match form {
            ProductForm::Paired => {
                f.mul(2 * k);
                f.mul(2 * k);
                f.div(2 * k - 1);
                f.div(2 * k + 1);
            }
            ProductForm::SquaredOverOdd => {
                f.mul(2 * k);
                f.div(2 * k - 1);
            }
            ProductForm::SquaredTimesOdd => {
                f.mul(2 * k);
                f.div(2 * k + 1);
            }
        }
    }
    match form {
        ProductForm::Paired => {}
        ProductForm::SquaredOverOdd => {
            f.square();
            f.div(limit);
        }
        ProductForm::SquaredTimesOdd => {
            f.square();
            f.mul(limit);
        }
    }
    CancelToken::check(cancel)?;
    Ok(f.to_rational())
}

/// Exact `a_n` for `n ≥ 1`.
pub fn wallis_product(n: u64, form: ProductForm) -> Result<BigRational> {
    wallis_product_with(n, form, ProductStrategy::Auto, None)
}

pub fn wallis_product_with(
    n: u64,
    form: ProductForm,
    strategy: ProductStrategy,
    cancel: Option<&CancelToken>,
) -> Result<BigRational> {
    if n == 0 {
        return Err(invalid("the Wallis product is indexed from n = 1"));
    }
    match strategy {
        ProductStrategy::Sequential => sequential(n, form, cancel),
        ProductStrategy::Tree => tree(n, form, cancel),
        ProductStrategy::Auto if n > TREE_THRESHOLD => tree(n, form, cancel),
        ProductStrategy::Auto => sequential(n, form, cancel),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn first_terms() {
        assert_eq!(wallis_product(1, ProductForm::Paired).unwrap(), r(4, 3));
        for form in ProductForm::ALL {
            assert_eq!(wallis_product(2, form).unwrap(), r(64, 45));
            assert_eq!(wallis_product(3, form).unwrap(), r(256, 175));
        }
    }

    #[test]
    fn zero_rejected() {
        assert!(wallis_product(0, ProductForm::Paired).is_err());
    }

    #[test]
    fn strategies_agree() {
        for n in [1u64, 7, 50, 333] {
            for form in ProductForm::ALL {
                let a = wallis_product_with(n, form, ProductStrategy::Sequential, None).unwrap();
                let b = wallis_product_with(n, form, ProductStrategy::Tree, None).unwrap();
                assert_eq!(a, b);
                assert_eq!(a.numer(), b.numer());
            }
        }
    }

    #[test]
    fn partials_track_every_form() {
        let mut p = WallisPartials::new();
        for _ in 0..40 {
            p.advance();
            let a = p.value(ProductForm::Paired);
            assert_eq!(a, p.value(ProductForm::SquaredOverOdd));
            assert_eq!(a, p.value(ProductForm::SquaredTimesOdd));
        }
        assert_eq!(p.value(ProductForm::Paired), wallis_product(40, ProductForm::Paired).unwrap());
    }

    #[test]
    fn cancellation_stops_long_products() {
        let token = CancelToken::new();
        token.cancel();
        for strategy in [ProductStrategy::Sequential, ProductStrategy::Tree] {
            let res = wallis_product_with(5000, ProductForm::Paired, strategy, Some(&token));
            assert_eq!(res, Err(Error::Cancelled));
        }
    }

    #[test]
    fn parses_forms() {
        assert_eq!("paired".parse::<ProductForm>().unwrap(), ProductForm::Paired);
        assert!("nope".parse::<ProductForm>().is_err());
    }
}
