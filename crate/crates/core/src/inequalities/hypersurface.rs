//! Hodge numbers of smooth hypersurfaces in projective space.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diamond::FormalHodgeDiamond;
use crate::error::{Error, Result};

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficients of `(1 + t + … + t^{d-2})^{m}`.
fn truncated_geometric_power(d: usize, m: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for _ in 0..m {
        let mut next = vec![BigInt::zero(); out.len() + d - 2];
        for (i, c) in out.iter().enumerate() {
            for slot in &mut next[i..=i + d - 2] {
                *slot += c;
            }
        }
        out = next;
    }
    out
}

/// The diamond of a smooth degree-`d` hypersurface `V_d ⊂ P^{n+1}`.
pub fn hypersurface_hodge(n: usize, d: usize) -> Result<FormalHodgeDiamond<BigInt>> {
    if n == 0 || d < 2 {
        return Err(Error::Contract(format!("need n >= 1 and d >= 2, got n = {n}, d = {d}")));
    }
    let coeffs = truncated_geometric_power(d, n + 2);
    let middle = |q: usize| -> BigInt {
        ((q + 1) * d)
            .checked_sub(n + 2)
            .and_then(|e| coeffs.get(e).cloned())
            .unwrap_or_default()
    };
    Ok(FormalHodgeDiamond::from_fn(n, |p, q| {
        if p + q == n {
            middle(q) + BigInt::from(u8::from(p == q))
        } else if p == q {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }))
}

/// Euler number `d · Σ_{i=0}^{n} C(n+2, i) (-d)^{n-i}` of `V_d ⊂ P^{n+1}`.
pub fn hypersurface_euler(n: usize, d: usize) -> BigInt {
    let d_big = BigInt::from(d);
    let sum = (0..=n).fold(BigInt::zero(), |acc, i| {
        acc + binomial((n + 2) as u64, i as u64) * num_traits::pow(-d_big.clone(), n - i)
    });
    d_big * sum
}

/// Primitive Betti numbers `P^j = b_j - b_{j-2}`, `j = 0 … n`, of
/// `V_d × P^{n-k}` where `V_d ⊂ P^{k+1}` has dimension `k`.
pub fn product_primitive(n: usize, k: usize, d: usize) -> Result<Vec<BigInt>> {
    if k == 0 || k > n {
        return Err(Error::Contract(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let x = hypersurface_hodge(k, d)?.kunneth(&FormalHodgeDiamond::projective(n - k));
    let b = x.betti();
    Ok((0..=n)
        .map(|j| {
            let below = if j >= 2 { b.get(j - 2).clone() } else { BigInt::zero() };
            b.get(j).clone() - below
        })
        .collect())
}
