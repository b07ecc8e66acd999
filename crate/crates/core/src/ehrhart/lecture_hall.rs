//! h*-vectors of lecture hall simplices via s-ascents of inversion sequences.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::HStarVector;

/// Histogram of `asc_s(m)` over the inversion sequences `0 <= m_i < s_i`.
///
/// With `m_0 = 0`, `s_0 = 1`, position `i` in `0..d` is an ascent when
/// `m_i / s_i < m_{i+1} / s_{i+1}`, compared by cross-multiplication.
/// Fails when `Π s_i` exceeds `budget`.
pub fn lecture_hall_hstar(s: &[u64], budget: u64) -> Result<HStarVector> {
    let d = s.len();
    if d == 0 || s.iter().any(|&x| x == 0) {
        return Err(Error::Domain(format!("s must be a nonempty positive vector, got {s:?}")));
    }
    let total = s.iter().try_fold(1u128, |acc, &x| acc.checked_mul(x as u128));
    match total {
        Some(n) if n <= budget as u128 => {}
        n => {
            return Err(Error::BudgetExceeded {
                needed: n.unwrap_or(u128::MAX),
                budget: budget as u128,
                hint: "use thin_lecture_hall_hstar for (1..,a,1..,b,1..) or the counting pipeline".into(),
            })
        }
    }
    let hist = (0..s[0])
        .into_par_iter()
        .map(|m1| {
            let mut hist = vec![0u64; d + 1];
            let mut m = vec![0u64; d];
            m[0] = m1;
            loop {
                hist[ascents(s, &m)] += 1;
                // odometer over positions 1..d
                let mut k = d;
                loop {
                    if k == 1 {
                        return hist;
                    }
                    k -= 1;
                    if m[k] + 1 < s[k] {
                        m[k] += 1;
                        break;
                    }
                    m[k] = 0;
                }
            }
        })
        .reduce(
            || vec![0u64; d + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    HStarVector::from_u64s(&hist)
}

fn ascents(s: &[u64], m: &[u64]) -> usize {
    // position 0: 0/1 < m_1/s_1
    let mut count = (m[0] > 0) as usize;
    for i in 0..s.len() - 1 {
        if (m[i] as u128) * (s[i + 1] as u128) < (m[i + 1] as u128) * (s[i] as u128) {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::thin_lecture_hall_hstar;

    fn h(v: &[u64]) -> HStarVector {
        HStarVector::from_u64s(v).unwrap()
    }

    #[test]
    fn known_vectors() {
        assert_eq!(lecture_hall_hstar(&[1, 2, 3], 1000).unwrap(), h(&[1, 4, 1, 0]));
        assert_eq!(lecture_hall_hstar(&[7, 1, 7], 1000).unwrap(), h(&[1, 12, 36, 0]));
        assert_eq!(lecture_hall_hstar(&[1, 1, 1, 1], 1000).unwrap(), h(&[1, 0, 0, 0, 0]));
        // s = (1, 2, ..., n) gives the Eulerian numbers
        assert_eq!(lecture_hall_hstar(&[1, 2, 3, 4], 1000).unwrap(), h(&[1, 11, 11, 1, 0]));
        assert!(matches!(
            lecture_hall_hstar(&[100, 100, 100], 1000),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(lecture_hall_hstar(&[1, 0], 1000).is_err());
    }

    #[test]
    fn thin_lemma() {
        for a in 1..=5u64 {
            for b in 1..=5u64 {
                for k1 in 0..=2usize {
                    for k2 in 1..=2usize {
                        for k3 in 0..=2usize {
                            let mut s = vec![1; k1];
                            s.push(a);
                            s.extend(std::iter::repeat(1).take(k2));
                            s.push(b);
                            s.extend(std::iter::repeat(1).take(k3));
                            assert_eq!(
                                lecture_hall_hstar(&s, 1 << 20).unwrap(),
                                thin_lecture_hall_hstar(a, b, k1, k2, k3).unwrap(),
                                "{s:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}
