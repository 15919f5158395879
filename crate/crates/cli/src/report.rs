use std::time::Instant;

use clap::ValueEnum;
use legendrian_core::front::{ComponentMap, FrontFile, StabilizeFlavor};
use legendrian_core::legskein::{LegSkein, LegSkeinOptions};
use legendrian_core::rulings::{oriented_ruling_polynomial, ruling_polynomial};
use legendrian_core::toposkein::{b_of, q_of, sharpness};
use legendrian_core::{LaurentPoly1, OrientedFront};
use serde::Serialize;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// R equals both B computations
    #[value(name = "3.1")]
    Ruling,
    /// OR equals Q for every orientation of knots and two-component links
    #[value(name = "4.1")]
    Oriented,
    /// sharpness consequences: HOMFLY sharp implies Kauffman sharp, and
    /// stabilizing kills B
    #[value(name = "corollaries")]
    Corollaries,
}

#[derive(Clone, Debug, Serialize)]
pub struct Agreement {
    pub r_equals_b_leg: bool,
    pub b_leg_equals_b_topo: bool,
    /// Over every orientation checked.
    pub or_equals_q: bool,
    pub homfly_sharp_implies_kauffman_sharp: bool,
    pub stabilized_b_vanishes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrontRecord {
    pub id: String,
    pub word: String,
    #[serde(rename = "R")]
    pub r: LaurentPoly1,
    #[serde(rename = "OR")]
    pub or: LaurentPoly1,
    #[serde(rename = "B_leg")]
    pub b_leg: LaurentPoly1,
    #[serde(rename = "B_topo")]
    pub b_topo: LaurentPoly1,
    #[serde(rename = "Q")]
    pub q: LaurentPoly1,
    pub beta: i64,
    pub kauffman_sharp: bool,
    pub homfly_sharp: bool,
    pub orientations_checked: usize,
    pub agreement: Agreement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

impl FrontRecord {
    pub fn agrees(&self, theorem: Check) -> bool {
        let a = &self.agreement;
        match theorem {
            Check::Ruling => a.r_equals_b_leg && a.b_leg_equals_b_topo,
            Check::Oriented => a.or_equals_q,
            Check::Corollaries => a.homfly_sharp_implies_kauffman_sharp && a.stabilized_b_vanishes,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub theorem: String,
    pub all_agree: bool,
    pub fronts: Vec<FrontRecord>,
}

/// Runs every evaluator on one front. None of them is consulted to skip
/// another.
pub fn verify_front(id: &str, file: &FrontFile, timing: bool) -> Result<FrontRecord, CliError> {
    let start = Instant::now();
    let w = &file.word;
    let of = OrientedFront::new(w, &file.reversed);
    let r = ruling_polynomial(w);
    let b_leg = LegSkein::new(LegSkeinOptions::from_env()).evaluate(w)?;
    let b_topo = b_of(w)?;
    let or = oriented_ruling_polynomial(&of);
    let q = q_of(&of)?;
    let report = sharpness(&of)?;

    let k = ComponentMap::of(w).count();
    let orientations: Vec<OrientedFront> = if k <= 2 {
        (0..1u32 << k)
            .map(|mask| OrientedFront::new(w, &(0..k).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
            .collect()
    } else {
        vec![of.clone()]
    };
    let mut or_equals_q = or == q;
    let mut homfly_implies = !report.homfly_sharp || report.kauffman_sharp;
    for o in &orientations {
        or_equals_q &= oriented_ruling_polynomial(o) == q_of(o)?;
        let s = sharpness(o)?;
        homfly_implies &= !s.homfly_sharp || s.kauffman_sharp;
    }
    let stabilized_b_vanishes = match w.first_segment() {
        Some((slice, position)) => b_of(&w.stabilize(slice, position, StabilizeFlavor::Up)?)?.is_zero(),
        None => true,
    };

    Ok(FrontRecord {
        id: id.to_string(),
        word: w.to_string(),
        agreement: Agreement {
            r_equals_b_leg: r == b_leg,
            b_leg_equals_b_topo: b_leg == b_topo,
            or_equals_q,
            homfly_sharp_implies_kauffman_sharp: homfly_implies,
            stabilized_b_vanishes,
        },
        r,
        or,
        b_leg,
        b_topo,
        q,
        beta: report.beta,
        kauffman_sharp: report.kauffman_sharp,
        homfly_sharp: report.homfly_sharp,
        orientations_checked: orientations.len(),
        millis: timing.then(|| start.elapsed().as_millis()),
    })
}

impl VerificationReport {
    pub fn new(theorem: Check, fronts: Vec<FrontRecord>) -> Self {
        let name = theorem.to_possible_value().expect("no skipped variants").get_name().to_string();
        Self { schema: 1, theorem: name, all_agree: fronts.iter().all(|f| f.agrees(theorem)), fronts }
    }

    pub fn render_text(&self, theorem: Check) -> String {
        let mut out = String::new();
        for f in &self.fronts {
            let verdict = if f.agrees(theorem) { "agree" } else { "DISAGREE" };
            let detail = match theorem {
                Check::Ruling => format!("R = {}; B_leg = {}; B_topo = {}", f.r, f.b_leg, f.b_topo),
                Check::Oriented => format!("OR = {}; Q = {}; orientations {}", f.or, f.q, f.orientations_checked),
                Check::Corollaries => format!(
                    "beta {}; kauffman_sharp {}; homfly_sharp {}; stabilized B = 0 {}",
                    f.beta, f.kauffman_sharp, f.homfly_sharp, f.agreement.stabilized_b_vanishes
                ),
            };
            out.push_str(&format!("{:<12} {verdict:<8} {detail}", f.id));
            if let Some(ms) = f.millis {
                out.push_str(&format!(" ({ms} ms)"));
            }
            out.push('\n');
        }
        let bad = self.fronts.iter().filter(|f| !f.agrees(theorem)).count();
        out.push_str(&format!("{} fronts, {} disagreeing\n", self.fronts.len(), bad));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(id: &str, file: &str) -> FrontRecord {
        verify_front(id, &FrontFile::parse(file).unwrap(), false).unwrap()
    }

    #[test]
    fn one_false_flag_fails_only_its_check() {
        let mut bad = record("trefoil", "l1 l3 x2 x2 x2 r1 r1");
        assert!(bad.agrees(Check::Ruling));
        bad.agreement.b_leg_equals_b_topo = false;
        let report = VerificationReport::new(Check::Ruling, vec![record("unknot", "l1 r1"), bad.clone()]);
        assert!(!report.all_agree);
        assert!(report.render_text(Check::Ruling).contains("DISAGREE"));
        assert!(VerificationReport::new(Check::Oriented, vec![bad]).all_agree);
    }
}
