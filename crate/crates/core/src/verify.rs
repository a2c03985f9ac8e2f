//! Executable property checks shared by the `verify` command and the test
//! suites.
//!
//! Each `check_*` function tests one instance and returns whether it held.
//! [`verify_entry`] and [`verify_random`] run them over seeded random
//! vectors and collect one [`PropertyReport`] per property.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::catalog::{CatalogEntry, EntryData};
use crate::data::{DualSurfaceData, SeifertData};
use crate::error::{Error, Result};
use crate::invariants::{alexander_polynomial, levine_tristram_signature, mk_signature};
use crate::laurent::LaurentPoly;
use crate::matrix::IntMatrix;
use crate::mk::MKForm;
use crate::pairing::{
    basis_vector, kearton_witness, DualSurfaceEvaluator, LambdaVector, PairingValue, PresentedPairing,
};
use crate::random::{random_laurent, random_seifert_with, random_vector, rng};

/// Exponent range of random Laurent coefficients in vectors.
pub const VECTOR_EXP_BOUND: i64 = 2;
/// Coefficient bound of random Laurent coefficients in vectors.
pub const VECTOR_COEFF_BOUND: i64 = 3;
/// Box searched for a Kearton witness.
pub const KEARTON_BOUND: i64 = 2;
/// Number of circle points per instance in the M_K signature check.
pub const SIGNATURE_POINTS: usize = 8;

fn add(v: &[LaurentPoly], w: &[LaurentPoly]) -> LambdaVector {
    v.iter().zip(w).map(|(a, b)| a + b).collect()
}

fn scale(p: &LaurentPoly, v: &[LaurentPoly]) -> LambdaVector {
    v.iter().map(|a| p * a).collect()
}

/// `Bl(v + Rx, w + Ry) = Bl(v, w)`.
pub fn check_well_defined(
    b: &PresentedPairing,
    v: &[LaurentPoly],
    w: &[LaurentPoly],
    x: &[LaurentPoly],
    y: &[LaurentPoly],
) -> Result<bool> {
    let base = b.value(v, w)?;
    let v2 = add(v, &b.relation(x)?);
    let w2 = add(w, &b.relation(y)?);
    Ok(b.value(&v2, w)? == base && b.value(v, &w2)? == base && b.value(&v2, &w2)? == base)
}

/// `Bl(w, v) = conj Bl(v, w)`.
pub fn check_hermitian<P: PairingValue>(b: &P, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<bool> {
    Ok(b.pairing_value(w, v)? == b.pairing_value(v, w)?.conjugate())
}

/// `Bl(pv + v', qw) = p Bl(v, w) conj(q) + Bl(v', w) conj(q)`.
pub fn check_sesquilinear<P: PairingValue>(
    b: &P,
    p: &LaurentPoly,
    q: &LaurentPoly,
    v: &[LaurentPoly],
    v2: &[LaurentPoly],
    w: &[LaurentPoly],
) -> Result<bool> {
    let qbar = q.conjugate();
    let lhs = b.pairing_value(&add(&scale(p, v), v2), &scale(q, w))?;
    let rhs = b
        .pairing_value(v, w)?
        .scale(&(p * &qbar))
        .add(&b.pairing_value(v2, w)?.scale(&qbar));
    Ok(lhs == rhs)
}

/// `Bl(e_i, w) = 0` for every generator exactly when `w = 0` in the module.
pub fn check_nonsingular(b: &PresentedPairing, w: &[LaurentPoly]) -> Result<bool> {
    let n = b.size();
    let mut annihilates = true;
    for i in 0..n {
        if !b.value(&basis_vector(n, i), w)?.is_zero() {
            annihilates = false;
            break;
        }
    }
    Ok(annihilates == b.is_zero_element(w)?)
}

/// The dual-surface form with `(A, A^T, A - A^T)` on `(v, w)` equals the
/// Seifert pairing on `(Av, Aw)`.
pub fn check_consistency(seifert: &SeifertData, v: &[LaurentPoly], w: &[LaurentPoly]) -> Result<bool> {
    let a = seifert.matrix();
    let data = DualSurfaceData::new(a.clone(), a.transpose(), a.checked_sub(&a.transpose())?)?;
    let dual = DualSurfaceEvaluator::new(&data)?;
    let b = PresentedPairing::from_seifert(seifert)?;
    let al = a.to_laurent();
    Ok(dual.value(v, w)? == b.value(&al.mul_vec(v)?, &al.mul_vec(w)?)?)
}

/// Builds `M_K`, which checks its entries lie in `Λ` and that it is
/// hermitian, and compares `det M_K` with the Alexander polynomial up to a
/// unit.
pub fn check_mk_form(seifert: &SeifertData) -> Result<bool> {
    let mk = MKForm::new(seifert)?;
    Ok(mk.det().is_associate(&alexander_polynomial(seifert)))
}

/// Compares `sign M_K(z)` with `σ_z` at `count` random circle points where
/// both are determinate, and checks the signature is even. Points where
/// either side is indeterminate are redrawn, up to a fixed budget.
pub fn check_mk_signature<R: Rng>(seifert: &SeifertData, rng: &mut R, count: usize) -> Result<bool> {
    let mk = MKForm::new(seifert)?;
    let mut found = 0;
    for _ in 0..count * 20 {
        if found == count {
            break;
        }
        let theta: f64 = rng.random_range(0.01..std::f64::consts::TAU - 0.01);
        let z = Complex64::from_polar(1.0, theta);
        let (sigma, mk_sign) = match (levine_tristram_signature(seifert, z), mk_signature(&mk, z)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(Error::Indeterminate { .. }), _) | (_, Err(Error::Indeterminate { .. })) => continue,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        if sigma != mk_sign || sigma % 2 != 0 {
            return Ok(false);
        }
        found += 1;
    }
    Ok(found == count)
}

/// Outcome of one property over all trials.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    /// The property does not apply to this kind of input.
    Skipped,
    WitnessFound,
    NoWitness,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::WitnessFound => "WITNESS FOUND",
            Status::NoWitness => "NO WITNESS",
        })
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct PropertyReport {
    pub property: &'static str,
    pub status: Status,
    pub checks: usize,
    /// A replayable entry followed by `#` comment lines with the vectors.
    pub counterexample: Option<String>,
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plural = if self.checks == 1 { "" } else { "s" };
        write!(f, "{}: {} ({} check{plural})", self.property, self.status, self.checks)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { trials: 20, seed: 0 }
    }
}

struct Tally {
    property: &'static str,
    status: Status,
    checks: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn new(property: &'static str) -> Self {
        Tally {
            property,
            status: Status::Pass,
            checks: 0,
            counterexample: None,
        }
    }

    fn skipped(property: &'static str) -> Self {
        Tally {
            status: Status::Skipped,
            ..Tally::new(property)
        }
    }

    fn record(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.status != Status::Fail {
            self.status = Status::Fail;
            self.counterexample = Some(context());
        }
    }

    fn finish(self) -> PropertyReport {
        PropertyReport {
            property: self.property,
            status: self.status,
            checks: self.checks,
            counterexample: self.counterexample,
        }
    }
}

fn render_vector(v: &[LaurentPoly]) -> String {
    let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn counterexample(entry: &CatalogEntry, vectors: &[(&str, &[LaurentPoly])]) -> String {
    let mut out = entry.render();
    for (name, v) in vectors {
        out += &format!("# {name} = {}\n", render_vector(v));
    }
    out
}

const PAIRING_PROPERTIES: [&str; 4] = ["well-defined", "sesquilinear", "hermitian", "nonsingular"];

fn pairing_suite(
    entry: &CatalogEntry,
    b: &PresentedPairing,
    rng: &mut ChaCha8Rng,
    trials: usize,
    tallies: &mut [Tally; 4],
) -> Result<()> {
    let n = b.size();
    let draw = |rng: &mut ChaCha8Rng| random_vector(rng, n, VECTOR_EXP_BOUND, VECTOR_COEFF_BOUND);
    for trial in 0..trials {
        let (v, w, x, y, v2) = (draw(rng), draw(rng), draw(rng), draw(rng), draw(rng));
        let p = random_laurent(rng, VECTOR_EXP_BOUND, VECTOR_COEFF_BOUND);
        let q = random_laurent(rng, VECTOR_EXP_BOUND, VECTOR_COEFF_BOUND);

        let ok = check_well_defined(b, &v, &w, &x, &y)?;
        tallies[0].record(ok, || counterexample(entry, &[("v", &v), ("w", &w), ("x", &x), ("y", &y)]));
        let ok = check_sesquilinear(b, &p, &q, &v, &v2, &w)?;
        let (pv, qv) = (vec![p.clone()], vec![q.clone()]);
        tallies[1].record(ok, || {
            counterexample(entry, &[("p", &pv), ("q", &qv), ("v", &v), ("v'", &v2), ("w", &w)])
        });
        let ok = check_hermitian(b, &v, &w)?;
        tallies[2].record(ok, || counterexample(entry, &[("v", &v), ("w", &w)]));
        // alternate between relations, which are zero, and generic vectors
        let target = if trial % 2 == 0 { b.relation(&x)? } else { w.clone() };
        let ok = check_nonsingular(b, &target)?;
        tallies[3].record(ok, || counterexample(entry, &[("w", &target)]));
    }
    Ok(())
}

fn new_tallies() -> [Tally; 4] {
    PAIRING_PROPERTIES.map(Tally::new)
}

/// Runs every applicable property on one catalog entry.
pub fn verify_entry(entry: &CatalogEntry, config: VerifyConfig) -> Result<Vec<PropertyReport>> {
    let mut rng = rng(config.seed);
    let mut tallies = new_tallies();
    let mut consistency = Tally::new("consistency");
    let mut mk_form = Tally::new("mk-form");
    let mut mk_sig = Tally::new("mk-signature");
    let mut kearton = Tally::new("kearton-ill-defined");

    match &entry.data {
        EntryData::Seifert(s) => {
            let b = PresentedPairing::from_seifert(s)?;
            pairing_suite(entry, &b, &mut rng, config.trials, &mut tallies)?;
            seifert_extras(entry, s, &mut rng, config.trials, &mut consistency, &mut mk_form, &mut mk_sig)?;
            let witness = kearton_search(s)?;
            kearton.checks = 1;
            kearton.status = if witness.is_some() { Status::WitnessFound } else { Status::NoWitness };
            kearton.counterexample = witness;
        }
        EntryData::Fibred(f) => {
            let b = PresentedPairing::from_fibred(f)?;
            pairing_suite(entry, &b, &mut rng, config.trials, &mut tallies)?;
            // the dual surface (P, id, J) gives the same form on generators
            let data = DualSurfaceData::new(f.monodromy().clone(), IntMatrix::identity(f.size()), f.intersection().clone())?;
            let dual = DualSurfaceEvaluator::new(&data)?;
            let n = f.size();
            for i in 0..n {
                for j in 0..n {
                    let (ei, ej) = (basis_vector(n, i), basis_vector(n, j));
                    let ok = dual.value(&ei, &ej)? == b.value(&ei, &ej)?;
                    consistency.record(ok, || counterexample(entry, &[("v", &ei), ("w", &ej)]));
                }
            }
            mk_form = Tally::skipped("mk-form");
            mk_sig = Tally::skipped("mk-signature");
            kearton = Tally::skipped("kearton-ill-defined");
        }
        EntryData::DualSurface(d) => {
            // only the closed form is available, so test it directly
            let dual = DualSurfaceEvaluator::new(d)?;
            let n = d.iota_plus().rows();
            let [_, mut sesquilinear, mut hermitian, _] = tallies;
            for _ in 0..config.trials {
                let draw = |rng: &mut ChaCha8Rng| random_vector(rng, n, VECTOR_EXP_BOUND, VECTOR_COEFF_BOUND);
                let (v, w, v2) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
                let p = random_laurent(&mut rng, VECTOR_EXP_BOUND, VECTOR_COEFF_BOUND);
                let q = random_laurent(&mut rng, VECTOR_EXP_BOUND, VECTOR_COEFF_BOUND);
                let ok = check_sesquilinear(&dual, &p, &q, &v, &v2, &w)?;
                let (pv, qv) = (vec![p.clone()], vec![q.clone()]);
                sesquilinear.record(ok, || {
                    counterexample(entry, &[("p", &pv), ("q", &qv), ("v", &v), ("v'", &v2), ("w", &w)])
                });
                let ok = check_hermitian(&dual, &v, &w)?;
                hermitian.record(ok, || counterexample(entry, &[("v", &v), ("w", &w)]));
            }
            tallies = [
                Tally::skipped(PAIRING_PROPERTIES[0]),
                sesquilinear,
                hermitian,
                Tally::skipped(PAIRING_PROPERTIES[3]),
            ];
            consistency = Tally::skipped("consistency");
            mk_form = Tally::skipped("mk-form");
            mk_sig = Tally::skipped("mk-signature");
            kearton = Tally::skipped("kearton-ill-defined");
        }
    }
    let mut out: Vec<PropertyReport> = tallies.into_iter().map(Tally::finish).collect();
    out.extend([consistency, mk_form, mk_sig, kearton].map(Tally::finish));
    Ok(out)
}

fn seifert_extras(
    entry: &CatalogEntry,
    s: &SeifertData,
    rng: &mut ChaCha8Rng,
    trials: usize,
    consistency: &mut Tally,
    mk_form: &mut Tally,
    mk_sig: &mut Tally,
) -> Result<()> {
    let n = s.size();
    for _ in 0..trials {
        let v = random_vector(rng, n, VECTOR_EXP_BOUND, VECTOR_COEFF_BOUND);
        let w = random_vector(rng, n, VECTOR_EXP_BOUND, VECTOR_COEFF_BOUND);
        let ok = check_consistency(s, &v, &w)?;
        consistency.record(ok, || counterexample(entry, &[("v", &v), ("w", &w)]));
    }
    let ok = matches!(check_mk_form(s), Ok(true));
    mk_form.record(ok, || entry.render());
    let ok = check_mk_signature(s, rng, SIGNATURE_POINTS)?;
    mk_sig.record(ok, || entry.render());
    Ok(())
}

/// Kearton witness for `v = w = e_1`, rendered as `# x = [...]`.
fn kearton_search(s: &SeifertData) -> Result<Option<String>> {
    let n = s.size();
    if n == 0 {
        return Ok(None);
    }
    let e1 = basis_vector(n, 0);
    Ok(kearton_witness(s, &e1, &e1, KEARTON_BOUND)?.map(|x| {
        let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
        format!("# v = w = e1, x = [{}]\n", parts.join(", "))
    }))
}

/// Runs the suites on `count` random Seifert matrices of genus `genus`,
/// merging reports per property. The Kearton line reports whether a witness
/// was found for every instance.
pub fn verify_random(genus: usize, count: usize, coeff_bound: i64, config: VerifyConfig) -> Result<Vec<PropertyReport>> {
    let mut gen = rng(config.seed);
    let mut merged: Vec<PropertyReport> = Vec::new();
    for k in 0..count {
        let s = random_seifert_with(&mut gen, genus, coeff_bound);
        let entry = CatalogEntry::seifert(&format!("random-{k}"), s);
        let reports = verify_entry(
            &entry,
            VerifyConfig {
                trials: config.trials,
                seed: config.seed.wrapping_add(k as u64 + 1),
            },
        )?;
        if merged.is_empty() {
            merged = reports;
            continue;
        }
        for (m, r) in merged.iter_mut().zip(reports) {
            m.checks += r.checks;
            let worse = match (m.status, r.status) {
                (Status::Fail, _) => false,
                (_, Status::Fail) => true,
                (Status::WitnessFound, Status::NoWitness) => true,
                _ => false,
            };
            if worse {
                m.status = r.status;
                m.counterexample = r.counterexample;
            }
        }
    }
    Ok(merged)
}
