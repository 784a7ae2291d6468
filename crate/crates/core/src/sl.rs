//! The fixed basis of `sl_n` used by every matrix model.
//!
//! Order: the off-diagonal units `E_ij` (`i ≠ j`, lexicographic in `(i, j)`),
//! then the Cartan elements `H_i = E_ii − E_(i+1)(i+1)` for `i = 0..n−1`.
//! Indices are 0-based throughout.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlElement {
    /// Matrix unit `E_ij`, `i ≠ j`.
    Root(usize, usize),
    /// `E_ii − E_(i+1)(i+1)`.
    Cartan(usize),
}

impl SlElement {
    /// Shift of a `GL_n` weight under this element (zero for Cartan elements).
    pub fn weight_shift(&self, n: usize) -> Vec<i64> {
        let mut s = vec![0; n];
        if let SlElement::Root(i, j) = *self {
            s[i] += 1;
            s[j] -= 1;
        }
        s
    }
}

/// The basis of `sl_n` in the crate's fixed order.
pub fn sl_basis(n: usize) -> Vec<SlElement> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(SlElement::Root(i, j));
            }
        }
    }
    out.extend((0..n.saturating_sub(1)).map(SlElement::Cartan));
    out
}

pub fn sl_dim(n: usize) -> usize {
    n * n - 1
}

/// Position of an element in [`sl_basis`].
pub fn sl_index(n: usize, e: SlElement) -> usize {
    match e {
        SlElement::Root(i, j) => i * (n - 1) + if j < i { j } else { j - 1 },
        SlElement::Cartan(i) => n * (n - 1) + i,
    }
}

/// The element as an `n × n` integer matrix.
pub fn sl_matrix(n: usize, e: SlElement) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    match e {
        SlElement::Root(i, j) => m[i][j] = 1,
        SlElement::Cartan(i) => {
            m[i][i] = 1;
            m[i + 1][i + 1] = -1;
        }
    }
    m
}

/// Coordinates of a trace-free `n × n` matrix in [`sl_basis`].
pub fn sl_coordinates(n: usize, m: &[Vec<i64>]) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && m[i][j] != 0 {
                out.push((sl_index(n, SlElement::Root(i, j)), m[i][j]));
            }
        }
    }
    let trace: i64 = (0..n).map(|i| m[i][i]).sum();
    assert_eq!(trace, 0, "matrix is not trace free");
    let mut running = 0;
    for i in 0..n.saturating_sub(1) {
        running += m[i][i];
        if running != 0 {
            out.push((sl_index(n, SlElement::Cartan(i)), running));
        }
    }
    out.sort_unstable();
    out
}

/// Structure constants: `[a, b]` in basis coordinates.
pub fn bracket(n: usize, a: SlElement, b: SlElement) -> Vec<(usize, i64)> {
    let (x, y) = (sl_matrix(n, a), sl_matrix(n, b));
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j] += x[i][k] * y[k][j] - y[i][k] * x[k][j];
            }
        }
    }
    sl_coordinates(n, &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_order_and_index_agree() {
        for n in 1..6 {
            let b = sl_basis(n);
            assert_eq!(b.len(), sl_dim(n));
            for (k, e) in b.iter().enumerate() {
                assert_eq!(sl_index(n, *e), k);
            }
        }
    }

    #[test]
    fn sl2_brackets() {
        let e = SlElement::Root(0, 1);
        let f = SlElement::Root(1, 0);
        let h = SlElement::Cartan(0);
        assert_eq!(bracket(2, e, f), vec![(sl_index(2, h), 1)]);
        assert_eq!(bracket(2, h, e), vec![(sl_index(2, e), 2)]);
        assert_eq!(bracket(2, h, f), vec![(sl_index(2, f), -2)]);
    }

    #[test]
    fn cartan_coordinates_roundtrip() {
        let n = 4;
        let d = vec![
            vec![3, 0, 0, 0],
            vec![0, -1, 0, 0],
            vec![0, 0, -4, 0],
            vec![0, 0, 0, 2],
        ];
        let c = sl_coordinates(n, &d);
        let mut back = vec![vec![0i64; n]; n];
        for (k, v) in c {
            let m = sl_matrix(n, sl_basis(n)[k]);
            for i in 0..n {
                back[i][i] += v * m[i][i];
            }
        }
        assert_eq!(back, d);
    }
}
