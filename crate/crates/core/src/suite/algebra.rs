use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{measured, Measured, VerifyConfig};
use crate::error::Result;
use crate::exec::nan_max;
use crate::hilbert::{BarredOp, QMatrix, QSpinor};
use crate::quat::{mat4_max_diff, mat4_mul, ImaginaryUnit, Quaternion};
use crate::spin::larmor::{spin_casimir_residual, spin_commutator_residual};

const EPS: f64 = 1e-12;

fn random_quat(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

/// Hamilton's table written out by hand: `TABLE[a][b] = (sign, index)` with
/// `e_a e_b = sign · e_index` for `e = (1, i, j, k)`.
const TABLE: [[(f64, usize); 4]; 4] = [
    [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
    [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
    [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
    [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0)],
];

fn basis_residual() -> f64 {
    let e = [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K];
    let mut worst = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            let (sign, idx) = TABLE[a][b];
            worst = nan_max(worst, (e[a] * e[b]).dist(e[idx] * sign));
        }
    }
    worst
}

pub(super) fn run(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Measured>> {
    let n = cfg.algebra_samples;
    let triples: Vec<[Quaternion; 3]> = (0..n)
        .map(|_| [random_quat(rng), random_quat(rng), random_quat(rng)])
        .collect();
    let deltas: Vec<f64> = (0..cfg.eta_samples)
        .map(|_| rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
        .collect();
    let linear: Vec<(QMatrix, [QSpinor; 2], [f64; 2], f64)> = (0..100)
        .map(|_| {
            let m = QMatrix([
                [random_quat(rng), random_quat(rng)],
                [random_quat(rng), random_quat(rng)],
            ]);
            let a = QSpinor::new(random_quat(rng), random_quat(rng));
            let b = QSpinor::new(random_quat(rng), random_quat(rng));
            (
                m,
                [a, b],
                [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)],
                rng.gen_range(-3.0..3.0),
            )
        })
        .collect();

    let ex = cfg.exec;
    let assoc = ex.max_of(&triples, |[p, q, r]| ((*p * *q) * *r).dist(*p * (*q * *r)));
    let norm = ex.max_of(&triples, |[p, q, _]| ((*p * *q).norm() - p.norm() * q.norm()).abs());
    let matrix = ex.max_of(&triples, |[p, q, _]| {
        mat4_max_diff(&(*p * *q).as_matrix4(), &mat4_mul(&p.as_matrix4(), &q.as_matrix4()))
    });
    let phased = deltas
        .iter()
        .map(|&d| {
            ImaginaryUnit::phased_j(d)
                .quat()
                .dist(Quaternion::J * Quaternion::cis(-d))
        })
        .fold(0.0, nan_max);
    let real_linear = ex.max_of(&linear, |(m, [a, b], [x, y], d)| {
        let op = BarredOp::new(*m, ImaginaryUnit::phased_j(*d));
        let lhs = op.apply(&(*a * *x + *b * *y));
        let rhs = op.apply(a) * *x + op.apply(b) * *y;
        lhs.dist(&rhs)
    });

    let hbar = cfg.larmor.hbar;
    let comm_i = spin_commutator_residual(ImaginaryUnit::i(), hbar, ex);
    let comm_j = deltas
        .iter()
        .map(|&d| spin_commutator_residual(ImaginaryUnit::phased_j(d), hbar, ex))
        .fold(0.0, nan_max);
    let casimir = std::iter::once(ImaginaryUnit::i())
        .chain(deltas.iter().map(|&d| ImaginaryUnit::phased_j(d)))
        .map(|eta| spin_casimir_residual(eta, hbar))
        .fold(0.0, nan_max);

    Ok(vec![
        measured("algebra.basis_table", basis_residual(), 0.0),
        measured("algebra.associativity", assoc, EPS),
        measured("algebra.norm_multiplicative", norm, EPS),
        measured("algebra.matrix_oracle", matrix, EPS),
        measured("algebra.phased_j_identity", phased, EPS),
        measured("algebra.barred_real_linear", real_linear, EPS),
        measured("algebra.spin_commutator_i", comm_i, EPS),
        measured("algebra.spin_commutator_jphase", comm_j, EPS),
        measured("algebra.spin_casimir", casimir, EPS),
    ])
}
