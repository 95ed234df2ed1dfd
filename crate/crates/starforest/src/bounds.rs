//! Lower and upper bounds on the galaxy number of Q_n, with provenance
//! strings explaining which argument produced each side.

use serde::Serialize;

use crate::construct::{plan, MAX_PLAN_DIMENSION};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub n: u32,
    pub lower: usize,
    pub upper: usize,
    pub lower_provenance: String,
    pub upper_provenance: String,
    pub exact: bool,
    pub conjectured: Option<usize>,
    pub conjecture_confirmed: Option<bool>,
}

fn check_range(n: u32) -> Result<()> {
    if (1..=MAX_PLAN_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::Capacity(format!(
            "bounds dimension {n} outside 1..={MAX_PLAN_DIMENSION}"
        )))
    }
}

/// Best known lower bound. For even n a counting argument over centers
/// forces n/2 + 2 classes unless 2^{n/2+1} divides the vertex count, i.e.
/// unless n = 2^a - 2; for those dimensions n/2 + 1 is attained.
pub fn lower_bound(n: u32) -> Result<(usize, String)> {
    check_range(n)?;
    if n == 1 {
        return Ok((1, "one edge needs one class".into()));
    }
    if n % 2 == 1 {
        return Ok((
            (n as usize).div_ceil(2) + 1,
            "degree bound for regular graphs: ceil(n/2) + 1".into(),
        ));
    }
    if (n + 2).is_power_of_two() {
        Ok((
            n as usize / 2 + 1,
            "degree bound for regular graphs: n/2 + 1".into(),
        ))
    } else {
        Ok((
            n as usize / 2 + 2,
            "center-counting divisibility bound for even n: n/2 + 2".into(),
        ))
    }
}

/// Best known upper bound: the planner's construction, capped for n >= 5 by
/// the closed form ceil(n/2) + floor(log2 n) - 1.
pub fn upper_bound(n: u32) -> Result<(usize, String)> {
    check_range(n)?;
    let p = plan(n)?;
    let planned = (p.predicted_count, format!("construction {}", p.root));
    if n >= 5 {
        let closed = (n as usize).div_ceil(2) + (n.ilog2() as usize) - 1;
        if closed < planned.0 {
            return Ok((closed, "closed form ceil(n/2) + floor(log2 n) - 1".into()));
        }
    }
    Ok(planned)
}

/// Combines both bounds. The conjectured value is floor(n/2) + 2, except
/// 2^{a-1} for the settled family n = 2^a - 2; where the answer is known it
/// is also checked against the conjecture.
pub fn status(n: u32) -> Result<BoundsReport> {
    let (lower, lower_provenance) = lower_bound(n)?;
    let (upper, upper_provenance) = upper_bound(n)?;
    debug_assert!(lower <= upper);
    let exact = lower == upper;
    let conjectured = if n < 2 {
        None
    } else if (n + 2).is_power_of_two() {
        Some(((n as usize) + 2) / 2)
    } else {
        Some(n as usize / 2 + 2)
    };
    let conjecture_confirmed = conjectured.and_then(|c| exact.then_some(upper == c));
    Ok(BoundsReport {
        n,
        lower,
        upper,
        lower_provenance,
        upper_provenance,
        exact,
        conjectured,
        conjecture_confirmed,
    })
}
