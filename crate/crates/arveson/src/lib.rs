//! Invariants of quotient modules of the Drury-Arveson space.
//!
//! Probe stub; real modules land next.

pub fn probe() -> usize {
    1
}

#[cfg(test)]
mod probe_tests {
    use nalgebra::{Complex, DMatrix};

    #[test]
    fn complex_svd_sanity() {
        // rank-2 complex 3x3 with known singular structure
        let i = Complex::new(0.0, 1.0);
        let one = Complex::new(1.0, 0.0);
        let z = Complex::new(0.0, 0.0);
        let a = DMatrix::from_row_slice(3, 3, &[one, i, z, i, -one, z, z, z, z]);
        let svd = a.clone().svd(true, true);
        let mut sv: Vec<f64> = svd.singular_values.iter().cloned().collect();
        sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
        // rows 1,2 are proportional (row2 = i*row1) => rank 1, sigma = 2
        assert!((sv[0] - 2.0).abs() < 1e-12, "sv = {sv:?}");
        assert!(sv[1].abs() < 1e-12, "sv = {sv:?}");
        // reconstruction
        let u = svd.u.as_ref().unwrap();
        let vt = svd.v_t.as_ref().unwrap();
        let sigma = DMatrix::from_diagonal(&svd.singular_values.map(|s| Complex::new(s, 0.0)));
        let recon = u * sigma * vt;
        assert!((&a - &recon).norm() < 1e-10);

        // hermitian eigen check
        let h = &a * a.adjoint();
        let eig = nalgebra::SymmetricEigen::new(h.clone());
        let mut ev: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
        ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
        assert!((ev[0] - 4.0).abs() < 1e-10, "ev = {ev:?}");
    }

    #[test]
    fn bigrational_sanity() {
        use num::{BigRational, FromPrimitive};
        let a = BigRational::from_f64(0.5).unwrap();
        let b = BigRational::new(1.into(), 3.into());
        assert_eq!((&a + &b).to_string(), "5/6");
    }
}
