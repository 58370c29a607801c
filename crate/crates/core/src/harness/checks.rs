use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::crystal::charge::{kostka_foulkes, standard_tableaux};
use crate::crystal::energy::{energy, image_weight, x_polynomial_boxcase, EnergyRule};
use crate::crystal::ssot::ssot_enumerate;
use crate::crystal::tensor::{enumerate_highest, BoxTensor};
use crate::demazure::FormalCharacter;
use crate::error::Result;
use crate::length::LengthFunction;
use crate::partition::{rect_complement, Partition};
use crate::poly::QPoly;
use crate::roots::RootType;
use crate::weight::Weight;

use super::report::CheckReport;
use super::spec::CheckSpec;
use super::Harness;

const STD: LengthFunction = LengthFunction::Standard;
const GLA: LengthFunction = LengthFunction::GlA;

fn poly(p: &QPoly) -> Value {
    json!(p.coeffs())
}

fn negative_terms(p: &QPoly) -> Value {
    json!(p.terms().filter(|&(_, c)| c < 0).collect::<Vec<_>>())
}

/// The worked example in rank 3: the displayed elements, their energies and
/// their `ε^C`.
const EXAMPLE_ELEMENTS: [([i32; 3], u64, u32); 3] =
    [([-1, 1, 1], 2, 1), ([1, -1, 1], 4, 1), ([-2, 2, 1], 3, 2)];

fn character_json(f: &FormalCharacter) -> Value {
    let terms: Vec<Value> = f.terms().map(|(w, c)| json!([w, c.coeffs()])).collect();
    json!(terms)
}

impl Harness {
    pub fn verify_example_13(&self) -> Result<CheckReport> {
        self.verify_example_13_with(EnergyRule::CALIBRATED)
    }

    /// The worked example with a chosen energy convention; any convention
    /// other than the calibrated one is a negative control and fails.
    pub fn verify_example_13_with(&self, rule: EnergyRule) -> Result<CheckReport> {
        let small = self.kl(RootType::C, 3, &"1,1".parse()?, &Partition::empty(), &STD)?;
        let big = self.kl(RootType::C, 3, &"2,2,1".parse()?, &"1,1,1".parse()?, &STD)?;

        let mut found = enumerate_highest(3, &Weight(vec![1, 0, 0]), 3);
        found.sort();
        let mut expected: Vec<(BoxTensor, u64, u32)> = EXAMPLE_ELEMENTS
            .iter()
            .map(|(d, e, c)| Ok((BoxTensor::parse_displayed(d)?, *e, *c)))
            .collect::<Result<_>>()?;
        expected.sort();

        let side = |kl: Vec<Value>, elems: Vec<&BoxTensor>, energies: Vec<u64>, eps: Vec<u32>| {
            json!({ "kl": kl, "elements": elems, "energies": energies, "epsilon_c": eps })
        };
        let lhs = side(
            vec![poly(&small), poly(&big)],
            found.iter().collect(),
            found.iter().map(|t| rule.energy(t)).collect(),
            found.iter().map(BoxTensor::max_index).collect(),
        );
        let rhs = side(
            vec![json!([0, 0, 1, 0, 1]), json!([0, 0, 1, 1, 1])],
            expected.iter().map(|(t, _, _)| t).collect(),
            expected.iter().map(|&(_, e, _)| e).collect(),
            expected.iter().map(|&(_, _, c)| c).collect(),
        );
        let pass = lhs == rhs;
        Ok(CheckReport::new(CheckSpec::example_13(), pass, lhs.clone(), rhs.clone())
            .with_counterexample(json!({ "computed": lhs, "expected": rhs })))
    }

    /// `KL^{C_n}_{λ,((g−1)ⁿ)}` against `Σ q^E` over highest weight box tensors.
    pub fn verify_conj1_boxcase(&self, n: usize, g: u32, lambda: &Partition) -> Result<CheckReport> {
        let spec = CheckSpec::conj1_box(n, g, lambda.clone());
        let mu = Partition::rectangle(n, g - 1);
        let lhs = self.kl(RootType::C, n, lambda, &mu, &STD)?;
        let shape = rect_complement(lambda, g, n)?;
        let rhs = x_polynomial_boxcase(&shape, n, g)?;
        let pass = lhs == rhs;
        Ok(CheckReport::new(spec, pass, poly(&lhs), poly(&rhs))
            .with_counterexample(json!({ "mu": mu, "shape": shape, "weight": image_weight(&shape, g) })))
    }

    /// `#SSOT(λ̃, μ̃, ≤ g columns)` against `KL^{C_n}_{λμ}(1)`.
    pub fn verify_conj1_count(
        &self,
        n: usize,
        g: u32,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<CheckReport> {
        let spec = CheckSpec::conj1_count(n, g, lambda.clone(), mu.clone());
        let shape = rect_complement(lambda, g, n)?;
        let weight = rect_complement(mu, g, n)?;
        let count = ssot_enumerate(&shape, weight.parts(), g).len() as i64;
        let kl = self.kl(RootType::C, n, lambda, mu, &STD)?;
        let pass = count == kl.at_one();
        Ok(CheckReport::new(spec, pass, json!(count), json!(kl.at_one()))
            .with_counterexample(json!({ "shape": shape, "weight": weight, "kl": poly(&kl) })))
    }

    /// Nonnegativity of `KL^{C_n, L_A}_{λμ}`.
    pub fn verify_conj2(&self, n: usize, lambda: &Partition, mu: &Partition) -> Result<CheckReport> {
        let spec = CheckSpec::conj2(n, lambda.clone(), mu.clone());
        let p = self.kl(RootType::C, n, lambda, mu, &GLA)?;
        Ok(CheckReport::new(spec, p.is_nonnegative(), poly(&p), json!("nonnegative"))
            .with_counterexample(json!({ "negative_terms": negative_terms(&p) })))
    }

    /// Nonnegativity of `KL_{λμ}` with the standard length function.
    pub fn verify_kl_positivity(
        &self,
        kind: RootType,
        n: usize,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<CheckReport> {
        let spec = CheckSpec::kl_positivity(kind, n, lambda.clone(), mu.clone());
        let p = self.kl(kind, n, lambda, mu, &STD)?;
        Ok(CheckReport::new(spec, p.is_nonnegative(), poly(&p), json!("nonnegative"))
            .with_counterexample(json!({ "negative_terms": negative_terms(&p) })))
    }

    /// `KL_{λ+(1ⁿ),μ+(1ⁿ)} − KL_{λμ}` has nonnegative coefficients.
    pub fn verify_monotonicity(&self, n: usize, lambda: &Partition, mu: &Partition) -> Result<CheckReport> {
        let spec = CheckSpec::monotonicity(n, lambda.clone(), mu.clone());
        let bigger = self.kl(RootType::C, n, &lambda.add_columns(1, n), &mu.add_columns(1, n), &STD)?;
        let base = self.kl(RootType::C, n, lambda, mu, &STD)?;
        let diff = &bigger - &base;
        Ok(CheckReport::new(spec, diff.is_nonnegative(), poly(&bigger), poly(&base))
            .with_counterexample(json!({ "difference": poly(&diff) })))
    }

    /// `q^{(|λ|−|μ|)/2} ∞KL^{L_A}_{λμ} = ∞KL_{λμ}`. When `|λ| < |μ|` the shift
    /// moves to the other side. With an odd size difference the identity can
    /// only hold if both sides vanish. The note records whether the shift
    /// `|λ|−|μ|` would have worked as well.
    pub fn verify_stable_identity(
        &self,
        kind: RootType,
        n: usize,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<CheckReport> {
        let spec = CheckSpec::stable_identity(kind, n, lambda.clone(), mu.clone());
        let gla = self.stable_kl(kind, n, lambda, mu, &GLA)?;
        let std = self.stable_kl(kind, n, lambda, mu, &STD)?;
        let (a, b) = (lambda.size() as usize, mu.size() as usize);
        let (low, high, d) = if a >= b { (&gla, &std, a - b) } else { (&std, &gla, b - a) };
        let literal = low.shift(d) == *high;
        let (pass, lhs) = if d % 2 == 0 {
            let shifted = low.shift(d / 2);
            (shifted == *high, shifted)
        } else {
            (low.is_zero() && high.is_zero(), low.clone())
        };
        let (lhs, rhs) = if a >= b { (lhs, std.clone()) } else { (gla.clone(), lhs) };
        let note = format!(
            "shift {}/2; shift {} {}",
            d,
            d,
            if literal { "also holds" } else { "fails" }
        );
        Ok(CheckReport::new(spec, pass, poly(&lhs), poly(&rhs))
            .with_note(note)
            .with_counterexample(json!({ "stable_glA": poly(&gla), "stable_standard": poly(&std) })))
    }

    /// `KL_{λ+(kⁿ),μ+(kⁿ)}` equals `∞KL_{λμ}` at `k_max` and `k_max + 1`;
    /// `k_max` defaults to `|λ|+|μ|+n` and is doubled once before failing.
    pub fn verify_stabilization(
        &self,
        kind: RootType,
        n: usize,
        lambda: &Partition,
        mu: &Partition,
        length: &LengthFunction,
        k_max: Option<u32>,
    ) -> Result<CheckReport> {
        let mut spec = CheckSpec::stabilization(kind, n, lambda.clone(), mu.clone(), k_max);
        if *length != STD {
            spec.length = Some(length.clone());
        }
        let stable = self.stable_kl(kind, n, lambda, mu, length)?;
        let first = k_max.unwrap_or(lambda.size() + mu.size() + n as u32);
        let mut values: Vec<QPoly> = Vec::new();
        let mut attempt = |k_max: u32| -> Result<bool> {
            while values.len() <= k_max as usize + 1 {
                let k = values.len() as u32;
                values.push(self.kl(kind, n, &lambda.add_columns(k, n), &mu.add_columns(k, n), length)?);
            }
            Ok(values[k_max as usize] == stable && values[k_max as usize + 1] == stable)
        };
        let mut used = first;
        let mut pass = attempt(first)?;
        if !pass {
            used = (2 * first).max(1);
            pass = attempt(used)?;
        }
        let top = used as usize + 1;
        let k_star = (0..=top).find(|&k| values[k..=top].iter().all(|v| *v == stable));
        let lhs = json!({ "k_star": k_star, "k_max": used, "kl": poly(&values[used as usize]) });
        let sequence: Vec<Value> = values[..=top].iter().map(poly).collect();
        Ok(CheckReport::new(spec, pass, lhs, poly(&stable))
            .with_counterexample(json!({ "sequence": sequence })))
    }

    /// `KL^{A}_{λμ} = K_{λμ}` for `|λ| = |μ| ≤ bound` with at most `n` parts,
    /// and energy equals charge on every all-positive highest weight box
    /// tensor of length at most `bound`.
    pub fn verify_typea_charge(&self, n: usize, bound: u32) -> Result<CheckReport> {
        let spec = CheckSpec::typea_charge(n, bound);
        let mut cases = 0usize;
        let mut failures: Vec<Value> = Vec::new();
        for size in 0..=bound {
            let parts = Partition::all_of_size(size, n, size);
            for lambda in &parts {
                for mu in &parts {
                    cases += 1;
                    let kl = self.kl(RootType::A, n, lambda, mu, &STD)?;
                    let kf = kostka_foulkes(lambda, mu);
                    if kl != kf {
                        failures.push(json!({ "lambda": lambda, "mu": mu, "kl": poly(&kl), "kostka_foulkes": poly(&kf) }));
                    }
                }
            }
        }
        for m in 0..=bound {
            for shape in Partition::all_of_size(m, m as usize, m) {
                cases += 1;
                let syt = standard_tableaux(&shape);
                let mut from_tableaux: Vec<BoxTensor> = Vec::new();
                let mut charge_sum = QPoly::zero();
                for t in &syt {
                    let x = t.column_tensor();
                    if energy(&x) != t.charge() {
                        failures.push(json!({ "tableau": t, "energy": energy(&x), "charge": t.charge() }));
                    }
                    charge_sum += &QPoly::monomial(t.charge() as usize, 1);
                    from_tableaux.push(x);
                }
                from_tableaux.sort();
                let cap = shape.width() + 1;
                let weight = Weight::from_partition(&shape.transpose(), cap as usize);
                let mut highest: Vec<BoxTensor> = enumerate_highest(m as usize, &weight, cap)
                    .into_iter()
                    .filter(|t| t.factors().iter().all(|l| !l.is_barred()))
                    .collect();
                highest.sort();
                let energy_sum: QPoly = highest
                    .iter()
                    .map(|t| QPoly::monomial(energy(t) as usize, 1))
                    .sum();
                let kf = kostka_foulkes(&shape, &Partition::rectangle(m as usize, 1));
                if highest != from_tableaux || energy_sum != kf || charge_sum != kf {
                    failures.push(json!({ "shape": shape, "energy_sum": poly(&energy_sum), "kostka_foulkes": poly(&kf) }));
                }
            }
        }
        let agreeing = cases - failures.len().min(cases);
        failures.truncate(20);
        Ok(CheckReport::new(spec, failures.is_empty(), json!(agreeing), json!(cases))
            .with_counterexample(json!({ "first_failures": failures })))
    }

    /// `D_{w0}(e^μ Π 1/(1 − q^{L(α)} e^α))` against `Σ_λ KL^L_{λμ} χ^λ`, both
    /// truncated at `q^{q_max}`.
    pub fn verify_demazure(
        &self,
        kind: RootType,
        n: usize,
        mu: &Partition,
        length: &LengthFunction,
        q_max: u32,
    ) -> Result<CheckReport> {
        let spec = CheckSpec::demazure(kind, n, mu.clone(), length.clone(), q_max);
        let d = self.demazure(kind, n)?;
        let engine = self.engine(kind, n, length)?;
        let weight = Weight::from_partition(mu, n);
        let lhs = d.kl_generating_character(&weight, length, q_max as usize)?;
        let rhs = d.character_expansion(&engine, &weight, q_max as usize)?;
        let pass = lhs == rhs;
        let sides = |f: &FormalCharacter| json!({ "terms": f.len() });
        let expansion: BTreeMap<String, Vec<i64>> = d
            .expand_in_characters(&lhs)
            .into_iter()
            .map(|(w, c)| (w.to_string(), c.coeffs().to_vec()))
            .collect();
        Ok(CheckReport::new(spec, pass, sides(&lhs), sides(&rhs)).with_counterexample(json!({
            "demazure": character_json(&lhs),
            "alternating_sum": character_json(&rhs),
            "demazure_in_characters": expansion,
        })))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::energy::{FactorOrder, LocalH};
    use crate::harness::Status;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn example_13_and_negative_controls() {
        let h = Harness::new();
        let r = h.verify_example_13().unwrap();
        assert!(r.passed(), "{}", r.line());
        assert_eq!(r.lhs["kl"], json!([[0, 0, 1, 0, 1], [0, 0, 1, 1, 1]]));
        for rule in [
            EnergyRule { h: LocalH::Weak, order: FactorOrder::RightmostFirst },
            EnergyRule { h: LocalH::Strict, order: FactorOrder::LeftmostFirst },
        ] {
            let r = h.verify_example_13_with(rule).unwrap();
            assert_eq!(r.status, Status::Fail);
            assert_ne!(r.lhs["energies"], r.rhs["energies"]);
            assert!(r.counterexample.is_some());
        }
    }

    #[test]
    fn conj1_examples() {
        let h = Harness::new();
        let r = h.verify_conj1_boxcase(3, 1, &p("1,1")).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, json!([0, 0, 1, 0, 1]));
        let r = h.verify_conj1_boxcase(3, 2, &p("2,2,1")).unwrap();
        assert!(r.passed());
        assert_eq!(r.rhs, json!([0, 0, 1, 1, 1]));
        assert!(h.verify_conj1_boxcase(2, 1, &p("1,1")).unwrap().passed());
    }

    #[test]
    fn count_examples() {
        let h = Harness::new();
        let r = h.verify_conj1_count(3, 1, &p("1,1"), &Partition::empty()).unwrap();
        assert!(r.passed());
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (json!(2), json!(2)));
        let r = h.verify_conj1_count(2, 2, &p("2,1"), &p("2,1")).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (json!(1), json!(1)));
        assert!(h.verify_conj1_count(2, 2, &p("2,1"), &p("1")).unwrap().passed());
    }

    #[test]
    fn positivity_and_monotonicity_examples() {
        let h = Harness::new();
        assert!(h.verify_conj2(3, &p("1,1"), &Partition::empty()).unwrap().passed());
        let r = h.verify_conj2(2, &p("2,1"), &p("2,1")).unwrap();
        assert_eq!(r.lhs, json!([1]));
        let r = h.verify_monotonicity(3, &p("1,1"), &Partition::empty()).unwrap();
        assert!(r.passed());
        assert!(r.counterexample.is_none());
        let diff = h.kl(RootType::C, 3, &p("2,2,1"), &p("1,1,1"), &STD).unwrap()
            - h.kl(RootType::C, 3, &p("1,1"), &Partition::empty(), &STD).unwrap();
        assert_eq!(diff, QPoly::monomial(3, 1));
        assert!(h.verify_monotonicity(2, &p("1"), &p("1")).unwrap().passed());
    }

    #[test]
    fn stable_identity_examples() {
        let h = Harness::new();
        let r = h.verify_stable_identity(RootType::C, 2, &p("2"), &Partition::empty()).unwrap();
        assert!(r.passed(), "{}", r.line());
        assert_eq!(r.note.as_deref(), Some("shift 2/2; shift 2 fails"));
        let r = h.verify_stable_identity(RootType::D, 3, &p("1,1"), &p("1,1")).unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs, json!([1]));
    }

    #[test]
    fn stabilization_examples() {
        let h = Harness::new();
        let r = h
            .verify_stabilization(RootType::C, 3, &p("1,1"), &Partition::empty(), &STD, Some(4))
            .unwrap();
        assert!(r.passed(), "{}", r.line());
        assert!(r.lhs["k_star"].as_u64().unwrap() <= 4);
        let r = h
            .verify_stabilization(RootType::C, 2, &p("2,1"), &p("1"), &STD, Some(5))
            .unwrap();
        assert!(r.passed(), "{}", r.line());
        let r = h
            .verify_stabilization(RootType::A, 3, &p("2,1"), &p("1,1,1"), &STD, None)
            .unwrap();
        assert!(r.passed());
        assert_eq!(r.lhs["k_star"], json!(0));
    }

    #[test]
    fn typea_and_demazure_small() {
        let h = Harness::new();
        assert!(h.verify_typea_charge(3, 4).unwrap().passed());
        let r = h
            .verify_demazure(RootType::C, 2, &p("1"), &STD, 4)
            .unwrap();
        assert!(r.passed());
        let r = h.run(&CheckSpec::demazure(RootType::C, 2, p("1"), GLA, 2)).unwrap();
        assert_eq!(r.status, Status::Unsupported);
    }
}
