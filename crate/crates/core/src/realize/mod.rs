//! Forward constructions (line arrangement → labelled object arrangement) and
//! the sector checkers: mutual couples, the two angle observations, the
//! ordering gadget, and the equiangular / wide-spread conditions.

mod checks;
mod sectors;
mod segments;

pub(crate) use checks::wide_spread_violations_with;
pub use checks::{
    check_observation1, check_observation2, check_ordering_gadget, is_equiangular, is_mutual_couple, is_wide_spread,
    wide_spread_violations, CheckError, GadgetReport, WideSpreadViolation,
};
pub use sectors::{realize_sectors, realize_sectors_with_limit, SectorParameters, SectorRealization, MAX_ROUNDS};
pub use segments::{realize_segments, SegmentParameters, SegmentRealization};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::arrangement::ArrangementError;
use crate::geometry::{GeometryError, Rational};
use crate::reduce::ReduceError;
use crate::transmission::DiffReport;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RealizeError {
    #[error("arrangement is not simple")]
    NonSimpleArrangement,
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("no parameters found after {rounds} rounds ({} differences in the last round)", .last_diff.total())]
    ParameterSearchExhausted { rounds: u32, last_diff: Box<DiffReport> },
}

/// Largest power of two `<= q`, for `q > 0`.
pub(crate) fn pow2_floor(q: &Rational) -> Rational {
    assert!(q.is_positive(), "pow2_floor needs a positive argument");
    let mut k = q.numer().bits() as i64 - q.denom().bits() as i64;
    let pow = |k: i64| -> Rational {
        let base = BigInt::one() << k.unsigned_abs();
        if k >= 0 {
            Rational::from_integer(base)
        } else {
            Rational::new(BigInt::one(), base)
        }
    };
    while &pow(k) > q {
        k -= 1;
    }
    while &pow(k + 1) <= q {
        k += 1;
    }
    pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    #[test]
    fn pow2_floor_values() {
        assert_eq!(pow2_floor(&int(1)), int(1));
        assert_eq!(pow2_floor(&int(5)), int(4));
        assert_eq!(pow2_floor(&rat(1, 3)), rat(1, 4));
        assert_eq!(pow2_floor(&rat(1, 4)), rat(1, 4));
        assert_eq!(pow2_floor(&rat(1000, 7)), int(128));
        assert_eq!(pow2_floor(&rat(3, 1024)), rat(1, 512));
    }
}
