//! Report builders for each subcommand. Output is deterministic for fixed input.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use knotorder::{
    alexander_polynomial, bordism_class, branched_cover_homology, certify, family_independence_certificate,
    independent_family, integer_in_ideal, knot_verdict, primary_linking_form, quadratic_order4_check,
    relation_from_vector, ring_multiply, scalar_action, sigma_p_mod_p, CertifyVerdict, Character, DlogTable,
    GroupRingElement, KnotRecord, LaurentPolynomial, SeifertMatrix, Verdict, VerdictKind,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::certificate::{big_numbers, CertificateDocument};
use crate::{exit, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub code: i32,
}

fn render<T: Serialize>(format: OutputFormat, value: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => text(value),
    }
}

fn verdict_code(kind: VerdictKind) -> i32 {
    match kind {
        VerdictKind::InfiniteOrder { .. } => exit::OK,
        VerdictKind::Inconclusive => exit::INCONCLUSIVE,
        VerdictKind::Order4AlgebraicCandidate => exit::ORDER4_CANDIDATE,
    }
}

fn format_factorization(f: &[(u64, u32)]) -> String {
    if f.is_empty() {
        return "1".into();
    }
    f.iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Largest prime whose characters `analyze` scans one by one.
pub const CHARACTER_SCAN_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingEntry {
    pub prime: u64,
    /// `β(x, x) = c/p` for the chosen generator.
    pub self_linking_numerator: u64,
    pub square_class: i8,
    /// `σ_p ≠ 0 mod p` for every nontrivial character; skipped above [`CHARACTER_SCAN_LIMIT`].
    pub sigma_nonvanishing: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub alexander: String,
    #[serde(with = "big_numbers")]
    pub alexander_coeffs: Vec<BigInt>,
    pub determinant: u64,
    pub factorization: Vec<(u64, u32)>,
    /// Invariant factors of `H₁` of the branched double cover; needs a Seifert matrix.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<Vec<String>>,
    pub linking: Vec<LinkingEntry>,
    pub quadratic_parameter: Option<u64>,
    pub order4_criterion: Option<bool>,
    pub verdict: String,
    pub witness_prime: Option<u64>,
    #[serde(skip)]
    kind: Option<VerdictKind>,
}

impl AnalyzeReport {
    fn from_alexander(name: Option<String>, alexander: &LaurentPolynomial) -> Result<(Self, Verdict), CliError> {
        let verdict = knot_verdict(alexander)?;
        let determinant = alexander
            .eval(-1)
            .magnitude()
            .to_u64()
            .expect("knot_verdict accepted the determinant");
        let quadratic_parameter = alexander.quadratic_parameter();
        let report = AnalyzeReport {
            name,
            alexander: alexander.to_string(),
            alexander_coeffs: alexander.coeffs().to_vec(),
            determinant,
            factorization: verdict.factorization.clone(),
            homology: None,
            linking: Vec::new(),
            quadratic_parameter,
            order4_criterion: quadratic_parameter.map(quadratic_order4_check),
            verdict: verdict.kind.to_string(),
            witness_prime: verdict.witness_prime(),
            kind: Some(verdict.kind),
        };
        Ok((report, verdict))
    }

    pub fn for_seifert(v: &SeifertMatrix) -> Result<Self, CliError> {
        let (mut report, verdict) = Self::from_alexander(None, &alexander_polynomial(v))?;
        let h1 = branched_cover_homology(v);
        report.homology = Some(h1.invariant_factors().iter().map(ToString::to_string).collect());
        for &(p, e) in &verdict.factorization {
            if e != 1 {
                continue;
            }
            let form = primary_linking_form(v, p)?;
            let sigma_nonvanishing = (p <= CHARACTER_SCAN_LIMIT).then(|| {
                (1..p).all(|a| {
                    let class = bordism_class(&form, Character { p, a }).expect("same prime");
                    !sigma_p_mod_p(class).is_zero()
                })
            });
            report.linking.push(LinkingEntry {
                prime: p,
                self_linking_numerator: form.c,
                square_class: form.square_class(),
                sigma_nonvanishing,
            });
        }
        Ok(report)
    }

    pub fn for_record(r: &KnotRecord) -> Result<Self, CliError> {
        Ok(Self::from_alexander(Some(r.name.clone()), &r.alexander)?.0)
    }

    pub fn verdict_kind(&self) -> VerdictKind {
        self.kind.expect("set on construction")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(s, "knot: {name}");
        }
        let _ = writeln!(s, "Alexander polynomial: {}", self.alexander);
        let _ = writeln!(
            s,
            "determinant: {} = {}",
            self.determinant,
            format_factorization(&self.factorization)
        );
        if let Some(h) = &self.homology {
            let group = if h.is_empty() {
                "0".to_string()
            } else {
                h.iter().map(|d| format!("Z_{d}")).collect::<Vec<_>>().join(" + ")
            };
            let _ = writeln!(s, "H1(double branched cover): {group}");
        }
        for l in &self.linking {
            let scan = match l.sigma_nonvanishing {
                Some(true) => format!("sigma_{} nonzero on all {} nontrivial characters", l.prime, l.prime - 1),
                Some(false) => format!("sigma_{} VANISHES on some nontrivial character", l.prime),
                None => "character scan skipped".to_string(),
            };
            let _ = writeln!(
                s,
                "linking form on Z_{p}: beta(x,x) = {c}/{p}, square class {sq:+}, {scan}",
                p = l.prime,
                c = l.self_linking_numerator,
                sq = l.square_class,
            );
        }
        match (self.quadratic_parameter, self.order4_criterion) {
            (Some(a), Some(ok)) => {
                let _ = writeln!(
                    s,
                    "quadratic order-4 criterion (a = {a}): {}",
                    if ok { "satisfied" } else { "not satisfied" }
                );
            }
            _ => {
                let _ = writeln!(s, "quadratic order-4 criterion: not applicable");
            }
        }
        let _ = writeln!(s, "verdict: {}", self.verdict);
        s
    }
}

/// Full analysis of a Seifert matrix.
pub fn run_analyze(v: &SeifertMatrix, format: OutputFormat) -> Result<CommandOutput, CliError> {
    let report = AnalyzeReport::for_seifert(v)?;
    Ok(CommandOutput {
        stdout: render(format, &report, AnalyzeReport::to_text),
        code: verdict_code(report.verdict_kind()),
    })
}

/// Metabolizer enumeration and one certificate document per metabolizer.
pub fn run_certify(p: u64, d: usize, budget: u64, format: OutputFormat) -> Result<CommandOutput, CliError> {
    let outcome = certify(p, d, budget)?;
    let docs: Vec<CertificateDocument> = outcome
        .certificates
        .iter()
        .map(|c| CertificateDocument::from_certificate(c, outcome.verdict))
        .collect();
    let code = match outcome.verdict {
        CertifyVerdict::AllCertified => exit::OK,
        CertifyVerdict::NoMetabolizerPossible => exit::NO_METABOLIZER,
    };
    let stdout = render(format, &docs, |docs| {
        let mut s = format!(
            "prime {p}, copies {d}: {} ({} metabolizers)\n",
            outcome.verdict,
            docs.len()
        );
        for (i, (doc, cert)) in docs.iter().zip(&outcome.certificates).enumerate() {
            let _ = writeln!(
                s,
                "#{:<4} basis {:?}  permutation {:?}  f = {}  h = {}  n = {}",
                i + 1,
                doc.basis,
                doc.permutation,
                cert.relation,
                cert.cofactor,
                doc.integer_n
            );
        }
        s
    });
    Ok(CommandOutput { stdout, code })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub name: String,
    pub crossings: u32,
    pub determinant: u64,
    pub verdict: String,
    pub witness_prime: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Default)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    /// Witness prime → number of knots it settles.
    pub witness_counts: BTreeMap<u64, usize>,
    pub inconclusive: usize,
    pub order4_candidates: usize,
}

impl TableReport {
    pub fn build(records: &[KnotRecord]) -> Result<Self, CliError> {
        let mut report = TableReport::default();
        for r in records {
            let a = AnalyzeReport::for_record(r)?;
            match a.verdict_kind() {
                VerdictKind::InfiniteOrder { p } => *report.witness_counts.entry(p).or_default() += 1,
                VerdictKind::Inconclusive => report.inconclusive += 1,
                VerdictKind::Order4AlgebraicCandidate => report.order4_candidates += 1,
            }
            report.rows.push(TableRow {
                name: r.name.clone(),
                crossings: r.crossings,
                determinant: r.determinant,
                verdict: a.verdict,
                witness_prime: a.witness_prime,
            });
        }
        Ok(report)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if self.rows.is_empty() {
            s.push_str("no knots\n");
            return s;
        }
        let _ = writeln!(s, "{:<10} {:>9} {:>12}  verdict", "name", "crossings", "determinant");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<10} {:>9} {:>12}  {}",
                r.name, r.crossings, r.determinant, r.verdict
            );
        }
        let _ = writeln!(s);
        for (p, n) in &self.witness_counts {
            let _ = writeln!(s, "witness p={p}: {n}");
        }
        let _ = writeln!(s, "inconclusive: {}", self.inconclusive);
        let _ = writeln!(s, "order-4 candidates: {}", self.order4_candidates);
        s
    }
}

pub fn run_table(records: &[KnotRecord], format: OutputFormat) -> Result<CommandOutput, CliError> {
    let report = TableReport::build(records)?;
    Ok(CommandOutput {
        stdout: render(format, &report, TableReport::to_text),
        code: exit::OK,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub index: usize,
    pub primes: (u64, u64),
    pub twist: i64,
    pub determinant: u64,
    pub seifert: [[i64; 2]; 2],
    pub order4: bool,
    pub verdict: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub members: Vec<FamilyRow>,
    pub pairwise_coprime: bool,
    pub passed: bool,
}

impl FamilyReport {
    pub fn build(count: usize) -> Result<Self, CliError> {
        if count == 0 {
            return Err(CliError::Usage("--count must be at least 1".into()));
        }
        let members = independent_family(count);
        let check = family_independence_certificate(&members)?;
        let rows = members
            .iter()
            .zip(&check.members)
            .map(|(m, c)| FamilyRow {
                index: m.index,
                primes: m.primes,
                twist: m.twist,
                determinant: c.determinant,
                seifert: [[-1, 1], [0, m.twist]],
                order4: c.order4,
                verdict: c.verdict.to_string(),
                passed: c.passed(),
            })
            .collect();
        Ok(FamilyReport {
            members: rows,
            pairwise_coprime: check.pairwise_coprime(),
            passed: check.passed(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:>3} {:>14} {:>10} {:>12}  {:<20} order-4",
            "i", "primes", "twist", "determinant", "verdict"
        );
        for m in &self.members {
            let _ = writeln!(
                s,
                "{:>3} {:>14} {:>10} {:>12}  {:<20} {}",
                m.index,
                format!("({}, {})", m.primes.0, m.primes.1),
                m.twist,
                m.determinant,
                m.verdict,
                if m.order4 { "yes" } else { "no" }
            );
        }
        let _ = writeln!(s);
        let _ = writeln!(
            s,
            "pairwise coprime determinants: {}",
            if self.pairwise_coprime { "yes" } else { "no" }
        );
        let _ = writeln!(
            s,
            "independence certificate: {}",
            if self.passed { "passed" } else { "FAILED" }
        );
        s
    }
}

pub fn run_family(count: usize, format: OutputFormat) -> Result<CommandOutput, CliError> {
    let report = FamilyReport::build(count)?;
    Ok(CommandOutput {
        stdout: render(format, &report, FamilyReport::to_text),
        code: if report.passed { exit::OK } else { exit::ERROR },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingDemo {
    pub prime: u64,
    pub generator: u64,
    pub q: usize,
    pub vector: Vec<u64>,
    #[serde(with = "big_numbers")]
    pub relation: Vec<BigInt>,
    pub scalar: u64,
    pub scalar_dlog: u64,
    pub scaled_vector: Vec<u64>,
    #[serde(with = "big_numbers")]
    pub scaled_relation: Vec<BigInt>,
    /// `t^{dlog a mod q}` times the first relation equals the second.
    pub shift: usize,
    pub equivariant: bool,
    #[serde(with = "big_numbers::single")]
    pub integer_n: BigInt,
    #[serde(with = "big_numbers")]
    pub cofactor: Vec<BigInt>,
}

impl RingDemo {
    pub fn build() -> Result<Self, CliError> {
        let table = DlogTable::new(19)?;
        let x = vec![2u64, 3, 15, 16];
        let a = 5u64;
        let f = relation_from_vector(&x, &table);
        let scaled_vector: Vec<u64> = x.iter().map(|&v| v * a % 19).collect();
        let g = scalar_action(&x, a, &table)?;
        let shift = table.exponent(a);
        let shifted = ring_multiply(&GroupRingElement::monomial(table.q(), shift), &f)?;
        let witness = integer_in_ideal(&f)?;
        Ok(RingDemo {
            prime: 19,
            generator: table.generator(),
            q: table.q(),
            vector: x,
            relation: f.coeffs().to_vec(),
            scalar: a,
            scalar_dlog: table.dlog(a),
            scaled_vector,
            scaled_relation: g.coeffs().to_vec(),
            shift,
            equivariant: shifted == g,
            integer_n: witness.n,
            cofactor: witness.h.coeffs().to_vec(),
        })
    }

    pub fn to_text(&self) -> String {
        let f = GroupRingElement::from_coeffs(self.relation.clone());
        let g = GroupRingElement::from_coeffs(self.scaled_relation.clone());
        let h = GroupRingElement::from_coeffs(self.cofactor.clone());
        let mut s = String::new();
        let _ = writeln!(
            s,
            "p = {}, primitive root g = {}, q = (p-1)/2 = {}",
            self.prime, self.generator, self.q
        );
        let _ = writeln!(s, "x = {:?}  ->  f = {f}", self.vector);
        let _ = writeln!(s, "{}x = {:?}  ->  {g}", self.scalar, self.scaled_vector);
        let _ = writeln!(
            s,
            "{} = g^{} mod {}, so multiplication by t^{}: {}",
            self.scalar,
            self.scalar_dlog,
            self.prime,
            self.shift,
            if self.equivariant { "agrees" } else { "DISAGREES" }
        );
        let _ = writeln!(s, "least positive integer in (f): n = {}, with h = {h}", self.integer_n);
        s
    }
}

/// The `p = 19` group-ring computation end to end.
pub fn run_ring_demo(format: OutputFormat) -> Result<CommandOutput, CliError> {
    let demo = RingDemo::build()?;
    Ok(CommandOutput {
        stdout: render(format, &demo, RingDemo::to_text),
        code: if demo.equivariant { exit::OK } else { exit::ERROR },
    })
}
