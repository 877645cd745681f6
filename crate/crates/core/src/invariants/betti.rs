//! Predicted graded Betti tables of canonical curves of gonality at most 4.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use super::{gonality, is_hyperelliptic, schreyer_invariants};
use crate::error::{Error, Result};
use crate::lattice::LatticePolygon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BettiFlag {
    /// Hyperelliptic: classical.
    Known,
    /// Trigonal: matches experiments.
    Observed,
    /// Tetragonal: conjectural.
    Conjectural,
}

fn serialize_rows<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    text.serialize(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub genus: i64,
    pub flag: BettiFlag,
    /// `rows[r][i] = β_{i,i+r}` for `r = 0..=3`, `i = 0..=g-2`.
    #[serde(serialize_with = "serialize_rows")]
    pub rows: Vec<Vec<BigInt>>,
}

impl BettiTable {
    /// `β_{i,j}`, zero outside the table.
    pub fn beta(&self, i: i64, j: i64) -> BigInt {
        let r = j - i;
        if !(0..=3).contains(&r) || i < 0 || i > self.genus - 2 {
            return BigInt::zero();
        }
        self.rows[r as usize][i as usize].clone()
    }
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// `ζ_i = β_{i,i+2}` for `0 <= i <= (g-3)/2`, then the full table via the
/// Euler characteristic relation and duality.
pub fn betti_from_zeta(g: i64, zeta: &[BigInt], flag: BettiFlag) -> Result<BettiTable> {
    if g < 3 {
        return Err(Error::GenusOutOfRange(g, 3, i64::MAX));
    }
    let m = (g - 3) / 2;
    if zeta.len() as i64 != m + 1 {
        return Err(Error::OutOfRange(format!("expected {} values of ζ", m + 1)));
    }
    let n = (g - 1) as usize;
    // z[i] = β_{i,i+2}, l[i] = β_{i,i+1}
    let mut z: Vec<Option<BigInt>> = vec![None; n];
    let mut l: Vec<Option<BigInt>> = vec![None; n];
    z[n - 1] = Some(BigInt::zero());
    l[0] = Some(BigInt::zero());
    for (i, v) in zeta.iter().enumerate() {
        z[i] = Some(v.clone());
    }
    for i in 1..n {
        let ii = i as i64;
        let num = BigInt::from((g - 1 - ii) * (g - 1 - 2 * ii)) * binomial(g - 1, ii - 1);
        let (c, r) = num.div_rem(&BigInt::from(ii + 1));
        if !r.is_zero() {
            return Err(Error::Precondition("non-integral Euler characteristic term"));
        }
        let prev = match &z[i - 1] {
            Some(x) => x.clone(),
            None => {
                let k = (g - 2) as usize - (i - 1);
                l[k].clone().ok_or(Error::Precondition("Betti recursion out of order"))?
            }
        };
        l[i] = Some(c + prev);
        let mirror = (g - 2) as usize - i;
        if z[mirror].is_none() {
            z[mirror] = l[i].clone();
        }
    }
    let z: Vec<BigInt> = z.into_iter().map(|x| x.unwrap_or_default()).collect();
    let l: Vec<BigInt> = l.into_iter().map(|x| x.unwrap_or_default()).collect();
    for i in 1..n {
        if l[i] != z[n - 1 - i] {
            return Err(Error::Precondition("Betti table fails duality"));
        }
    }
    let mut top = vec![BigInt::zero(); n];
    top[0] = BigInt::one();
    let mut bottom = vec![BigInt::zero(); n];
    bottom[n - 1] = BigInt::one();
    let table = BettiTable { genus: g, flag, rows: vec![top, l, z, bottom] };
    if table.rows.iter().flatten().any(|x| x.is_negative()) {
        return Err(Error::Precondition("negative Betti number"));
    }
    Ok(table)
}

/// `None` for gonality at least 5.
pub fn predicted_betti(p: &LatticePolygon) -> Result<Option<BettiTable>> {
    let g = p.interior_count() as i64;
    if g < 3 {
        return Err(Error::GenusOutOfRange(g, 3, i64::MAX));
    }
    let m = (g - 3) / 2;
    let gon = gonality(p)?;
    let (flag, zeta): (BettiFlag, Vec<BigInt>) = if is_hyperelliptic(p) {
        (BettiFlag::Known, (0..=m).map(|i| BigInt::from(g - 2 - i) * binomial(g - 1, i)).collect())
    } else if gon == 3 {
        (BettiFlag::Observed, (0..=m).map(|i| BigInt::from(g - 2 - i) * binomial(g - 2, i - 1)).collect())
    } else if gon == 4 {
        let b2 = schreyer_invariants(p)?.b2;
        let zeta = (0..=m)
            .map(|i| {
                BigInt::from(g - 2 - i) * binomial(g - 2, i - 1)
                    - BigInt::from((b2 + 1).min(i)) * binomial(g - 3, i)
            })
            .collect();
        (BettiFlag::Conjectural, zeta)
    } else {
        return Ok(None);
    };
    betti_from_zeta(g, &zeta, flag).map(Some)
}
