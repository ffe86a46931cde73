use crate::linalg::IntMatrix;
use crate::Result;

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal with
/// non-negative entries `d_1 | d_2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> alloc::vec::Vec<i128> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)]).collect()
    }
}

/// Smith normal form by repeated smallest-pivot elimination.
///
/// Fails only on `i128` overflow of intermediate entries.
pub fn smith_normal_form(a: &IntMatrix) -> Result<Snf> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            // smallest non-zero entry of the trailing block
            let mut pivot = None;
            for i in t..m {
                for j in t..n {
                    let x = d[(i, j)].abs();
                    if x != 0 && pivot.is_none_or(|(_, _, best)| x < best) {
                        pivot = Some((i, j, x));
                    }
                }
            }
            let Some((pi, pj, _)) = pivot else {
                return Ok(Snf { u, d, v });
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)];
            let mut clean = true;
            for i in t + 1..m {
                let q = d[(i, t)].div_euclid(p);
                if q != 0 {
                    d.add_row(i, t, -q)?;
                    u.add_row(i, t, -q)?;
                }
                clean &= d[(i, t)] == 0;
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_euclid(p);
                if q != 0 {
                    d.add_col(j, t, -q)?;
                    v.add_col(j, t, -q)?;
                }
                clean &= d[(t, j)] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: pull an offending row into row t
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[(i, j)] % p != 0));
            match offending {
                Some(i) => {
                    d.add_row(t, i, 1)?;
                    u.add_row(t, i, 1)?;
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    Ok(Snf { u, d, v })
}
