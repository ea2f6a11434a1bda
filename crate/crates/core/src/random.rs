//! Seeded sampling: the named generator used across the crate, plus
//! uniform unit vectors and Haar-random SU(2) elements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::bloch::BlochVector;
use crate::su2::{Axis, Complex, Matrix2, Unitary2};

/// Identifier of the pseudorandom generator, written into output metadata.
pub const RNG_ALGORITHM: &str = "chacha20 (rand_chacha 0.9, seed_from_u64)";

/// Generator type used for every seeded draw in this crate.
pub type SeededRng = ChaCha20Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// An independent stream derived from `seed`. Streams with different ids
/// never overlap, so parallel workers can each own one.
pub fn stream_rng(seed: u64, stream: u64) -> SeededRng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn normal(rng: &mut impl Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// Three standard normals, normalized: uniform on the sphere.
pub fn unit_vector_components(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let (x, y, z) = (normal(rng), normal(rng), normal(rng));
        let norm = (x * x + y * y + z * z).sqrt();
        if norm > 1e-6 {
            return [x / norm, y / norm, z / norm];
        }
    }
}

pub fn random_bloch_vector(rng: &mut impl Rng) -> BlochVector {
    let [x, y, z] = unit_vector_components(rng);
    BlochVector::from_direction(x, y, z).expect("normalized sample")
}

pub fn random_axis(rng: &mut impl Rng) -> Axis {
    let [x, y, z] = unit_vector_components(rng);
    Axis::from_direction(x, y, z).expect("normalized sample")
}

/// Uniform unit quaternion `(a, b, c, d)` mapped to `a·𝟙 − i(b·σx + c·σy + d·σz)`.
/// The uniform measure on S³ is the Haar measure on SU(2).
pub fn haar_unitary(rng: &mut impl Rng) -> Unitary2 {
    let q = loop {
        let q = [normal(rng), normal(rng), normal(rng), normal(rng)];
        let norm = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            break q.map(|x| x / norm);
        }
    };
    let [a, b, c, d] = q;
    let m = Matrix2::new([
        [Complex::new(a, -d), Complex::new(-c, -b)],
        [Complex::new(c, -b), Complex::new(a, d)],
    ])
    .expect("finite entries");
    Unitary2::new(m).expect("unit quaternion gives a unitary")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_draws() {
        let a: Vec<u64> = (0..8).map(|_| rng_from_seed(7).random()).collect();
        let b: Vec<u64> = (0..8).map(|_| rng_from_seed(7).random()).collect();
        assert_eq!(a, b);
        let mut s0 = stream_rng(7, 0);
        let mut s1 = stream_rng(7, 1);
        assert_ne!(s0.random::<u64>(), s1.random::<u64>());
    }

    #[test]
    fn haar_samples_are_special_unitary() {
        let mut rng = rng_from_seed(1);
        for _ in 0..200 {
            let u = haar_unitary(&mut rng);
            assert!(u.unitarity_deviation() < 1e-14);
            assert!((u.matrix().determinant() - Complex::new(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn haar_first_moments_vanish() {
        // Haar averages of the quaternion components are zero and E[a²] = 1/4.
        let mut rng = rng_from_seed(99);
        let n = 20_000;
        let (mut re00, mut sq) = (0.0, 0.0);
        for _ in 0..n {
            let a = haar_unitary(&mut rng).matrix().get(0, 0).re;
            re00 += a;
            sq += a * a;
        }
        assert!((re00 / n as f64).abs() < 0.02);
        assert!((sq / n as f64 - 0.25).abs() < 0.01);
    }
}
