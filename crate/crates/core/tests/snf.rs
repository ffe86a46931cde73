use gvblocks_core::finite_forms::smith_normal_form;
use gvblocks_core::linalg::IntMatrix;
use num_integer::Integer;
use proptest::prelude::*;

fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..m).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

// Laplace expansion, only used on tiny matrices.
fn det(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = a[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * a[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

// gcd of all k x k minors: equals d_1 * ... * d_k.
fn determinantal_divisor(a: &[Vec<i128>], k: usize) -> i128 {
    let mut g = 0i128;
    for rows in subsets(a.len(), k) {
        for cols in subsets(a[0].len(), k) {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| a[r][c]).collect())
                .collect();
            g = g.gcd(&det(&minor));
        }
    }
    g
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-12i64..=12, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_matches_minors(rows in matrix_strategy()) {
        let a = IntMatrix::from_rows(&rows).unwrap();
        let snf = smith_normal_form(&a).unwrap();
        let (u, d, v) = (snf.u.to_rows(), snf.d.to_rows(), snf.v.to_rows());
        let a128 = a.to_rows();

        prop_assert_eq!(mat_mul(&mat_mul(&u, &a128), &v), d.clone());
        prop_assert_eq!(det(&u).abs(), 1);
        prop_assert_eq!(det(&v).abs(), 1);
        prop_assert!(snf.d.is_diagonal());

        let diag = snf.diagonal();
        for w in diag.windows(2) {
            prop_assert!(w[0] >= 0 && w[1] >= 0);
            if w[0] == 0 {
                prop_assert_eq!(w[1], 0);
            } else {
                prop_assert_eq!(w[1] % w[0], 0);
            }
        }
        let mut prefix = 1i128;
        for (k, &dk) in diag.iter().enumerate() {
            prefix *= dk;
            prop_assert_eq!(prefix, determinantal_divisor(&a128, k + 1));
        }
        if a.is_square() {
            prop_assert_eq!(prefix, det(&a128).abs());
        }
    }
}

#[test]
fn determinant_agrees_with_expansion() {
    let rows = vec![vec![3i64, -1, 4], vec![1, 5, -9], vec![2, 6, 5]];
    let a = IntMatrix::from_rows(&rows).unwrap();
    assert_eq!(a.determinant().unwrap(), det(&a.to_rows()));
}
