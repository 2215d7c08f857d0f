//! Numerical residuals for every algebraic identity the two families obey.
//!
//! The suite is parameterized over the family constructors so a deliberately
//! broken constructor can be run through it as a negative control.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::causal::{classify_coordinate, classify_geometric, measured_displacement};
use crate::error::Result;
use crate::factor::{gamma_antisymmetric, gamma_symmetric, k_constant, Sign};
use crate::matrix::Mat2;
use crate::metric::{interval_squared, transform_metric, Metric};
use crate::transform::{BranchKind, Transform, Velocity};
use crate::vector::TwoVector;
use crate::{ENTRY_TOLERANCE, INTERVAL_REL_TOLERANCE};

pub type FamilyFn = fn(Sign, f64, f64) -> Result<Transform>;

/// The two family constructors under test.
#[derive(Clone, Copy)]
pub struct Families {
    pub lambda: FamilyFn,
    pub l: FamilyFn,
}

impl Default for Families {
    fn default() -> Self {
        Families {
            lambda: Transform::lambda,
            l: Transform::l,
        }
    }
}

impl fmt::Debug for Families {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Families").finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random displacements per transform in the fuzzed checks.
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            trials: 100_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// Passes when `residual <= bound`.
    AtMost,
    /// Passes when `residual < bound`.
    Below,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub max_residual: f64,
    pub bound: f64,
    pub kind: Bound,
    pub samples: usize,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        match self.kind {
            Bound::AtMost => self.max_residual <= self.bound,
            Bound::Below => self.max_residual < self.bound,
        }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            Bound::AtMost => "<=",
            Bound::Below => "<",
        };
        write!(
            f,
            "{:<28} max_residual={:<12.3e} bound {op} {:<8.1e} samples={:<8} {}",
            self.name,
            self.max_residual,
            self.bound,
            self.samples,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Running maximum that treats NaN and construction failures as infinite.
#[derive(Default)]
struct Max {
    value: f64,
    samples: usize,
}

impl Max {
    fn push(&mut self, r: f64) {
        self.samples += 1;
        if r.is_nan() || r > self.value {
            self.value = if r.is_nan() { f64::INFINITY } else { r };
        }
    }

    fn push_result(&mut self, r: Result<f64>) {
        self.push(r.unwrap_or(f64::INFINITY));
    }

    fn check(self, name: &'static str, bound: f64, kind: Bound) -> IdentityCheck {
        IdentityCheck {
            name,
            max_residual: self.value,
            bound,
            kind,
            samples: self.samples,
        }
    }
}

/// `W` values spread over `±[1.001, 100]`, `count` in total.
pub fn swap_grid(count: usize) -> Vec<f64> {
    let half = count / 2;
    let positive: Vec<f64> = (0..half)
        .map(|i| {
            let t = i as f64 / (half.max(2) - 1) as f64;
            1.001 + t * (100.0 - 1.001)
        })
        .collect();
    positive
        .iter()
        .map(|w| -w)
        .chain(positive.iter().copied())
        .collect()
}

/// `V` values spread over `(−0.99, 0.99)`, excluding zero.
fn boost_grid(count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| -0.99 + 1.98 * (i as f64 + 0.5) / count as f64)
        .filter(|v| *v != 0.0)
        .collect()
}

const K_VALUES: [f64; 4] = [-1.0, -0.5, 0.5, 1.0];

/// `γ` recovered from a family matrix: the diagonal entry with `τ` removed.
fn gamma_of(t: &Transform, tau: Sign) -> f64 {
    tau.value() * t.matrix().get(0, 0)
}

fn check_gamma_parity() -> Vec<IdentityCheck> {
    let mut sym = Max::default();
    let mut anti = Max::default();
    for &k in &K_VALUES {
        for i in 1..=100 {
            let v = velocity_in_symmetric_domain(k, i);
            for s in [Sign::Plus, Sign::Minus] {
                sym.push_result((|| {
                    Ok((gamma_symmetric(k, v, s)? - gamma_symmetric(k, -v, s)?).abs())
                })());
            }
            if k > 0.0 {
                let w = velocity_in_antisymmetric_domain(k, i);
                for s in [Sign::Plus, Sign::Minus] {
                    anti.push_result((|| {
                        Ok((gamma_antisymmetric(k, w, s)? + gamma_antisymmetric(k, -w, s)?).abs())
                    })());
                }
            }
        }
    }
    vec![
        sym.check("gamma_symmetric_even", 0.0, Bound::AtMost),
        anti.check("gamma_antisymmetric_odd", 0.0, Bound::AtMost),
    ]
}

fn velocity_in_symmetric_domain(k: f64, i: usize) -> f64 {
    let limit = if k > 0.0 { 0.99 / k.sqrt() } else { 10.0 };
    limit * i as f64 / 100.0
}

fn velocity_in_antisymmetric_domain(k: f64, i: usize) -> f64 {
    (1.001 + 99.0 * (i - 1) as f64 / 99.0) / k.sqrt()
}

fn check_k_recovery(f: &Families) -> IdentityCheck {
    let mut max = Max::default();
    for &k in &K_VALUES {
        for i in 1..=100 {
            for tau in [Sign::Plus, Sign::Minus] {
                let v = velocity_in_symmetric_domain(k, i);
                max.push_result((|| {
                    let gp = gamma_of(&(f.lambda)(tau, k, v)?, tau);
                    let gm = gamma_of(&(f.lambda)(tau, k, -v)?, tau);
                    Ok((k_constant(gp, gm, v)? - k).abs())
                })());
                if k > 0.0 {
                    let w = velocity_in_antisymmetric_domain(k, i);
                    max.push_result((|| {
                        let gp = gamma_of(&(f.l)(tau, k, w)?, tau);
                        let gm = gamma_of(&(f.l)(tau, k, -w)?, tau);
                        Ok((k_constant(gp, gm, w)? - k).abs())
                    })());
                }
            }
        }
    }
    max.check("k_recovery", 1e-10, Bound::AtMost)
}

fn check_determinants(f: &Families) -> Vec<IdentityCheck> {
    let mut lam = Max::default();
    for &k in &[-1.0_f64, 0.5, 1.0] {
        for tau in [Sign::Plus, Sign::Minus] {
            for v in boost_grid(100) {
                let v = if k > 0.0 { v / k.sqrt() } else { v };
                lam.push_result((|| {
                    let expected = (1.0 - v * v) / (1.0 - k * v * v);
                    Ok(((f.lambda)(tau, k, v)?.det() - expected).abs())
                })());
            }
        }
    }
    let mut l = Max::default();
    for tau in [Sign::Plus, Sign::Minus] {
        for w in swap_grid(400) {
            l.push_result((|| Ok(((f.l)(tau, 1.0, w)?.det() + 1.0).abs()))());
        }
    }
    vec![
        lam.check("det_lambda", ENTRY_TOLERANCE, Bound::AtMost),
        l.check("det_l", ENTRY_TOLERANCE, Bound::AtMost),
    ]
}

fn check_swap_decomposition(f: &Families) -> IdentityCheck {
    let mut max = Max::default();
    for w in swap_grid(400) {
        max.push_result((|| {
            let boost = (f.lambda)(Sign::Plus, 1.0, 1.0 / w)?;
            let l = (f.l)(Sign::Minus, 1.0, w)?;
            Ok((Mat2::SWAP * *boost.matrix()).max_abs_diff(l.matrix()))
        })());
    }
    max.check("swap_decomposition", ENTRY_TOLERANCE, Bound::AtMost)
}

fn check_inverse_law(f: &Families) -> IdentityCheck {
    let mut max = Max::default();
    for w in swap_grid(400) {
        max.push_result((|| {
            let a = (f.l)(Sign::Minus, 1.0, w)?;
            let b = (f.l)(Sign::Minus, 1.0, -w)?;
            Ok((*a.matrix() * *b.matrix()).max_abs_diff(&Mat2::IDENTITY))
        })());
    }
    max.check("inverse_law", ENTRY_TOLERANCE, Bound::AtMost)
}

fn check_parity(f: &Families) -> Vec<IdentityCheck> {
    let mut lam = Max::default();
    let mut l = Max::default();
    let vs = boost_grid(100);
    let ws = swap_grid(100);
    for tau in [Sign::Plus, Sign::Minus] {
        for (&v, &w) in vs.iter().zip(&ws) {
            lam.push_result((|| {
                let lhs = (f.lambda)(tau, 1.0, v)?.parity_conjugate();
                let rhs = (f.lambda)(tau, 1.0, -v)?;
                Ok(lhs.matrix().max_abs_diff(rhs.matrix()))
            })());
            l.push_result((|| {
                let lhs = (f.l)(tau, 1.0, w)?.parity_conjugate();
                let rhs = (f.l)(tau, 1.0, -w)?;
                Ok(lhs.matrix().max_abs_diff(&-*rhs.matrix()))
            })());
        }
    }
    vec![
        lam.check("parity_lambda_reverses_v", ENTRY_TOLERANCE, Bound::AtMost),
        l.check("parity_l_negates", ENTRY_TOLERANCE, Bound::AtMost),
    ]
}

fn check_metric_signature(f: &Families) -> Vec<IdentityCheck> {
    let mut lam = Max::default();
    let mut l = Max::default();
    for v in boost_grid(100) {
        lam.push_result((|| {
            let g = transform_metric(&(f.lambda)(Sign::Plus, 1.0, v)?, &Metric::STANDARD)?;
            Ok(g.matrix().max_abs_diff(Metric::STANDARD.matrix()))
        })());
    }
    for w in swap_grid(400) {
        l.push_result((|| {
            let g = transform_metric(&(f.l)(Sign::Minus, 1.0, w)?, &Metric::STANDARD)?;
            Ok(g.matrix().max_abs_diff(Metric::SWAPPED.matrix()))
        })());
    }
    vec![
        lam.check("metric_lambda_preserved", ENTRY_TOLERANCE, Bound::AtMost),
        l.check("metric_l_swapped", ENTRY_TOLERANCE, Bound::AtMost),
    ]
}

fn check_light_cone(f: &Families) -> IdentityCheck {
    let mut max = Max::default();
    let rays = [
        TwoVector::new(1.0, 1.0),
        TwoVector::new(1.0, -1.0),
        TwoVector::new(-1.0, 1.0),
        TwoVector::new(-1.0, -1.0),
    ];
    for tau in [Sign::Plus, Sign::Minus] {
        for v in boost_grid(100) {
            for d in rays {
                max.push_result((|| {
                    let out = (f.lambda)(tau, 1.0, v)?.apply(d);
                    Ok((out.c1.abs() - out.c2.abs()).abs())
                })());
            }
        }
        for w in swap_grid(400) {
            for d in rays {
                max.push_result((|| {
                    let out = (f.l)(tau, 1.0, w)?.apply(d);
                    Ok((out.c1.abs() - out.c2.abs()).abs())
                })());
            }
        }
    }
    max.check("light_cone_preserved", ENTRY_TOLERANCE, Bound::AtMost)
}

/// Ten boosts and ten swap-branch transforms with `k = 1`, random `τ`.
pub fn random_transforms(rng: &mut impl Rng, f: &Families) -> Result<Vec<Transform>> {
    let mut out = Vec::with_capacity(20);
    for _ in 0..10 {
        let tau = if rng.random_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        out.push((f.lambda)(tau, 1.0, rng.random_range(-0.99..0.99))?);
    }
    for _ in 0..10 {
        let tau = if rng.random_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let magnitude = rng.random_range(1.01..100.0);
        let w = if rng.random_bool(0.5) {
            magnitude
        } else {
            -magnitude
        };
        out.push((f.l)(tau, 1.0, w)?);
    }
    Ok(out)
}

pub fn random_displacement(rng: &mut impl Rng) -> TwoVector {
    loop {
        let d = TwoVector::new(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0));
        if !d.is_zero() {
            return d;
        }
    }
}

/// Interval invariance, causal-class absoluteness and measured-speed
/// restoration over seeded random displacements.
fn check_fuzzed(f: &Families, config: &SuiteConfig) -> Vec<IdentityCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut interval = Max::default();
    let mut causal = Max::default();
    let mut measured = Max::default();

    let transforms = match random_transforms(&mut rng, f) {
        Ok(ts) => ts,
        Err(_) => {
            interval.push(f64::INFINITY);
            causal.push(f64::INFINITY);
            measured.push(f64::INFINITY);
            Vec::new()
        }
    };
    let displacements: Vec<TwoVector> = (0..config.trials)
        .map(|_| random_displacement(&mut rng))
        .collect();

    for t in &transforms {
        let g = match transform_metric(t, &Metric::STANDARD) {
            Ok(g) => g,
            Err(_) => {
                interval.push(f64::INFINITY);
                continue;
            }
        };
        let mut mismatches = 0usize;
        for &d in &displacements {
            let before = interval_squared(d, &Metric::STANDARD);
            let after = interval_squared(t.apply(d), &g);
            interval.push((after - before).abs() / before.abs().max(d.norm_squared()));

            let class_before = classify_geometric(d, &Metric::STANDARD).map(|r| r.causal_class);
            let class_after = classify_geometric(t.apply(d), &g).map(|r| r.causal_class);
            if class_before.ok() != class_after.ok() {
                mismatches += 1;
            }
        }
        causal.push(mismatches as f64);
    }

    // Timelike worldlines with |v| < 1 read through the swapped measurement.
    for _ in 0..config.trials.min(10_000) {
        let v = rng.random_range(-0.999..0.999);
        let magnitude = rng.random_range(1.001..100.0);
        let w = if rng.random_bool(0.5) {
            magnitude
        } else {
            -magnitude
        };
        measured.push_result((|| {
            let eta = (f.l)(Sign::Minus, 1.0, w)?.apply(TwoVector::new(1.0, v));
            Ok(classify_coordinate(measured_displacement(eta))?.value())
        })());
    }

    vec![
        interval.check("interval_invariance", INTERVAL_REL_TOLERANCE, Bound::AtMost),
        causal.check("causal_class_absolute", 0.0, Bound::AtMost),
        measured.check("measured_speed_subluminal", 1.0, Bound::Below),
    ]
}

fn check_composition(f: &Families) -> Vec<IdentityCheck> {
    let mut lam = Max::default();
    let mut l = Max::default();
    let vs = boost_grid(20);
    for &v1 in &vs {
        for &v2 in &vs {
            lam.push_result((|| {
                let product =
                    (f.lambda)(Sign::Plus, 1.0, v1)?.compose(&(f.lambda)(Sign::Plus, 1.0, v2)?);
                let expected = (f.lambda)(Sign::Plus, 1.0, (v1 + v2) / (1.0 + v1 * v2))?;
                Ok(product.matrix().max_abs_diff(expected.matrix())
                    / product.matrix().max_abs_entry().max(1.0))
            })());
        }
    }
    // Away from |W| = 1 the recomposed velocity stays clear of the light cone.
    let ws: Vec<f64> = swap_grid(20)
        .iter()
        .map(|w| w * 1.25 / 1.001)
        .filter(|w| w.abs() <= 100.0)
        .collect();
    for &w1 in &ws {
        for &w2 in &ws {
            l.push_result((|| {
                let product = (f.l)(Sign::Minus, 1.0, w1)?.compose(&(f.l)(Sign::Minus, 1.0, w2)?);
                let (u1, u2) = (1.0 / w1, 1.0 / w2);
                let v = (u1 + u2) / (1.0 + u1 * u2);
                let expected = (f.lambda)(Sign::Plus, 1.0, v)?;
                let fitted = product.refit(1.0);
                let branch_ok = matches!(
                    fitted.and_then(|t| t.params().map(|p| (t.branch(), p.vel))),
                    Some((BranchKind::SymmetricLambda, Velocity::Finite(_)))
                );
                let residual = product.matrix().max_abs_diff(expected.matrix())
                    / product.matrix().max_abs_entry().max(1.0);
                Ok(if branch_ok { residual } else { f64::INFINITY })
            })());
        }
    }
    vec![
        lam.check("compose_lambda_lambda", ENTRY_TOLERANCE, Bound::AtMost),
        l.check("compose_l_l_is_lambda", ENTRY_TOLERANCE, Bound::AtMost),
    ]
}

/// Runs every identity check with the given constructors.
pub fn run_identity_suite(f: &Families, config: &SuiteConfig) -> IdentityReport {
    let mut checks = check_gamma_parity();
    checks.push(check_k_recovery(f));
    checks.extend(check_determinants(f));
    checks.push(check_swap_decomposition(f));
    checks.push(check_inverse_law(f));
    checks.extend(check_parity(f));
    checks.extend(check_metric_signature(f));
    checks.push(check_light_cone(f));
    checks.extend(check_composition(f));
    checks.extend(check_fuzzed(f, config));
    IdentityReport { checks }
}
