//! Seeded random states and unitaries.
//!
//! Every sampler takes its generator explicitly. [`substream`] derives
//! independent, reproducible generators from one parent seed so that batches
//! can run in any order (or in parallel) and still give identical results.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::measures::XState;
use crate::qmat::{kron, CMat, DensityMatrix4, Mat2, Mat4};

/// Generator for stream `index` under `seed`.
pub fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Standard complex Gaussian with `E|z|² = 2`.
pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn ginibre<const N: usize, R: Rng + ?Sized>(rng: &mut R) -> CMat<N> {
    CMat::from_fn(|_, _| complex_normal(rng))
}

/// Ginibre state `GG†/Tr[GG†]` (Hilbert–Schmidt measure, full rank almost surely).
pub fn ginibre_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix4 {
    loop {
        let g: Mat4 = ginibre(rng);
        let gg = g * g.adjoint();
        let tr = gg.trace().re;
        if let Ok(rho) = DensityMatrix4::new(gg.scale(1.0 / tr).hermitian_part()) {
            return rho;
        }
    }
}

/// Haar-random pure state vector on `C⁴`.
pub fn haar_state_vector<R: Rng + ?Sized>(rng: &mut R) -> [Complex64; 4] {
    let mut v = [Complex64::new(0.0, 0.0); 4];
    for z in v.iter_mut() {
        *z = complex_normal(rng);
    }
    let norm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum());
    for z in v.iter_mut() {
        *z /= norm;
    }
    v
}

pub fn haar_pure_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix4 {
    loop {
        let v = haar_state_vector(rng);
        if let Ok(rho) = DensityMatrix4::new(Mat4::outer(&v)) {
            return rho;
        }
    }
}

/// `(G + G†)/2` with `G` Ginibre: a random Hermitian matrix with entries of order one.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R) -> Mat4 {
    ginibre::<4, R>(rng).hermitian_part()
}

/// Local unitary `U⊗V` with independent Haar factors.
pub fn random_local_unitary<R: Rng + ?Sized>(rng: &mut R) -> Mat4 {
    let u: Mat2 = crate::twirl::haar_unitary_2(rng);
    let v: Mat2 = crate::twirl::haar_unitary_2(rng);
    kron(&u, &v)
}

/// Random valid X-state.
///
/// Populations `(a, b, b, d)` are drawn from a flat simplex; coherences fill a
/// random fraction of their positivity bound `|e|² ≤ ad`, `|c| ≤ b` with
/// random phases, so both entangled branches are hit often.
pub fn random_xstate<R: Rng + ?Sized>(rng: &mut R) -> XState {
    let mut w = [0.0f64; 3];
    for x in w.iter_mut() {
        *x = -libm::log(1.0 - rng.random::<f64>());
    }
    let total = w[0] + w[1] + w[2];
    let a = w[0] / total;
    let d = w[2] / total;
    let b = 0.5 * w[1] / total;
    let norm = a + 2.0 * b + d;
    let (a, b, d) = (a / norm, b / norm, d / norm);

    let phase = |rng: &mut R| {
        let t = 2.0 * core::f64::consts::PI * rng.random::<f64>();
        Complex64::new(libm::cos(t), libm::sin(t))
    };
    let e = phase(rng) * (libm::sqrt(a * d) * rng.random::<f64>());
    let c = phase(rng) * (b * rng.random::<f64>());
    XState { a, b, c, d, e }
}
