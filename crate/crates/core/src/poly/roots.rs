use nalgebra::DMatrix;
use num_complex::Complex64;

use super::ComplexPolynomial;
use crate::error::{Error, Result};

const POLISH_STEPS: usize = 3;

/// All roots of `p`, counted with multiplicity.
///
/// Eigenvalues of the balanced companion matrix (complex Schur form), each
/// refined by a few Newton steps that are kept only when they lower the residual.
pub fn roots(p: &ComplexPolynomial) -> Result<Vec<Complex64>> {
    let degree = p.degree();
    if degree == 0 {
        return Err(Error::InvalidDegree);
    }
    let c = &p.coeffs()[..=degree];
    if degree == 1 {
        return Ok(vec![-c[0] / c[1]]);
    }

    let lead = c[degree];
    let mut companion = DMatrix::<Complex64>::zeros(degree, degree);
    for i in 1..degree {
        companion[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..degree {
        companion[(i, degree - 1)] = -c[i] / lead;
    }
    balance(&mut companion);

    let eig = companion.schur().eigenvalues().ok_or(Error::RootFindingFailed(degree))?;

    let trimmed = ComplexPolynomial::from_vec(c.to_vec());
    let dp = trimmed.derivative();
    Ok(eig.iter().map(|&z| polish(&trimmed, &dp, z)).collect())
}

fn polish(p: &ComplexPolynomial, dp: &ComplexPolynomial, mut z: Complex64) -> Complex64 {
    let mut residual = p.eval(z).norm();
    for _ in 0..POLISH_STEPS {
        let slope = dp.eval(z);
        if slope.norm() == 0.0 || residual == 0.0 {
            break;
        }
        let next = z - p.eval(z) / slope;
        let next_residual = p.eval(next).norm();
        if !(next_residual < residual) || !next.re.is_finite() || !next.im.is_finite() {
            break;
        }
        z = next;
        residual = next_residual;
    }
    z
}

/// Parlett–Reinsch diagonal balancing by powers of two.
fn balance(m: &mut DMatrix<Complex64>) {
    let n = m.nrows();
    let radix = 2.0_f64;
    let mut converged = false;
    while !converged {
        converged = true;
        for i in 0..n {
            let mut col = 0.0;
            let mut row = 0.0;
            for j in 0..n {
                if j != i {
                    col += m[(j, i)].l1_norm();
                    row += m[(i, j)].l1_norm();
                }
            }
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let total = col + row;
            let mut f = 1.0;
            let mut g = row / radix;
            while col < g {
                f *= radix;
                col *= radix * radix;
            }
            g = row * radix;
            while col > g {
                f /= radix;
                col /= radix * radix;
            }
            if (col + row) / f < 0.95 * total {
                converged = false;
                for j in 0..n {
                    m[(i, j)] /= f;
                    m[(j, i)] *= f;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted(mut r: Vec<Complex64>) -> Vec<Complex64> {
        r.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        r
    }

    #[test]
    fn imaginary_pair() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let r = sorted(roots(&p).unwrap());
        assert!((r[0] - c(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1] - c(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn first_order_complex_root() {
        // -(2+j)/(1+j) = -(3-j)/2
        let p = ComplexPolynomial::first_order(c(1.0, 1.0), c(2.0, 1.0));
        let r = roots(&p).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0] - c(-1.5, 0.5)).norm() < 1e-15);
        assert!(p.eval(r[0]).norm() < 1e-15);
    }

    #[test]
    fn double_root() {
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(-2.0, 0.0), c(1.0, 0.0)]).unwrap();
        for z in roots(&p).unwrap() {
            assert!((z - c(1.0, 0.0)).norm() < 1e-7);
        }
    }

    #[test]
    fn degree_zero_is_rejected() {
        let p = ComplexPolynomial::new(vec![c(3.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(roots(&p), Err(Error::InvalidDegree));
        let z = ComplexPolynomial::new(vec![c(0.0, 0.0)]).unwrap();
        assert_eq!(roots(&z), Err(Error::InvalidDegree));
    }

    #[test]
    fn badly_scaled_coefficients() {
        // (s + 1e-3)(s + 1)(s + 1e3)
        let p = ComplexPolynomial::new(vec![c(1.0, 0.0), c(1001.001, 0.0), c(1001.001, 0.0), c(1.0, 0.0)]).unwrap();
        let r = sorted(roots(&p).unwrap());
        assert!((r[0].re + 1e3).abs() < 1e-9);
        assert!((r[1].re + 1.0).abs() < 1e-12);
        assert!((r[2].re + 1e-3).abs() < 1e-15);
    }
}
