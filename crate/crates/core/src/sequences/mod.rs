//! Exact generation of the sequences around Wallis's formula.

pub mod binomial;
pub mod integrals;
pub mod table;
pub mod variations;
pub mod wallis;

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

pub use binomial::{central_binomial, central_binomial_ratio, ApproxValue};
pub use integrals::{
    moment_integral, moment_integral_closed_form, moment_integrals, probability_integral, wallis_integral,
    wallis_integral_closed_form, wallis_integrals,
};
pub use table::{sequence_table, SeqRow, SeqTable, SequenceName};
pub use variations::{variation_term, Limit, VariationId, VariationTerm};
pub use wallis::{wallis_product, wallis_product_with, ProductForm, ProductStrategy, WallisPartials};

/// Cooperative cancellation flag, checked between factors of long products.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }

    pub(crate) fn check(token: Option<&CancelToken>) -> Result<()> {
        match token {
            Some(t) if t.is_cancelled() => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }
}
