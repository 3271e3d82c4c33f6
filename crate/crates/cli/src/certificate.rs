//! JSON certificate documents. Loading always re-verifies; serialized data is never trusted.

use knotorder::{CertifyVerdict, GroupRingElement, MetabolizerCertificate};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Integers of any size, written as bare JSON numbers.
pub(crate) mod big_numbers {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::ser::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    fn to_number(n: &BigInt) -> Result<Number, serde_json::Error> {
        serde_json::from_str(&n.to_string())
    }

    fn from_number(n: &Number) -> Option<BigInt> {
        n.to_string().parse().ok()
    }

    pub fn serialize<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let nums = values
            .iter()
            .map(to_number)
            .collect::<Result<Vec<_>, _>>()
            .map_err(S::Error::custom)?;
        nums.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Number>::deserialize(d)?
            .iter()
            .map(|n| from_number(n).ok_or_else(|| D::Error::custom(format!("{n} is not an integer"))))
            .collect()
    }

    pub mod single {
        use super::*;

        pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            to_number(value).map_err(S::Error::custom)?.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            let n = Number::deserialize(d)?;
            from_number(&n).ok_or_else(|| D::Error::custom(format!("{n} is not an integer")))
        }
    }
}

/// Verification builds a discrete-log table of size `p`.
pub const MAX_VERIFIABLE_PRIME: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub prime: u64,
    pub copies: usize,
    pub generator: u64,
    pub permutation: Vec<usize>,
    pub basis: Vec<Vec<u64>>,
    pub summed_vector: Vec<u64>,
    #[serde(with = "big_numbers")]
    pub relation_coeffs: Vec<BigInt>,
    #[serde(with = "big_numbers")]
    pub cofactor_coeffs: Vec<BigInt>,
    #[serde(with = "big_numbers::single")]
    pub integer_n: BigInt,
    pub verdict: String,
}

impl CertificateDocument {
    pub fn from_certificate(cert: &MetabolizerCertificate, verdict: CertifyVerdict) -> Self {
        CertificateDocument {
            prime: cert.p,
            copies: cert.d,
            generator: cert.generator,
            permutation: cert.permutation.clone(),
            basis: cert.basis.clone(),
            summed_vector: cert.summed_vector.clone(),
            relation_coeffs: cert.relation.coeffs().to_vec(),
            cofactor_coeffs: cert.cofactor.coeffs().to_vec(),
            integer_n: cert.n.clone(),
            verdict: verdict.to_string(),
        }
    }

    /// Rebuilds the library certificate and re-runs every check, including `h·f = n`.
    pub fn verify(&self) -> Result<MetabolizerCertificate, CliError> {
        if self.verdict != CertifyVerdict::AllCertified.to_string() {
            return Err(CliError::Certificate(format!("unexpected verdict {:?}", self.verdict)));
        }
        if self.prime > MAX_VERIFIABLE_PRIME {
            return Err(CliError::Certificate(format!(
                "prime {} exceeds {MAX_VERIFIABLE_PRIME}",
                self.prime
            )));
        }
        if self.relation_coeffs.is_empty() || self.relation_coeffs.len() != self.cofactor_coeffs.len() {
            return Err(CliError::Certificate(
                "relation and cofactor live in different rings".into(),
            ));
        }
        if self.summed_vector.len() != self.copies || self.basis.iter().any(|v| v.len() != self.copies) {
            return Err(CliError::Certificate("vector length differs from copies".into()));
        }
        let cert = MetabolizerCertificate {
            p: self.prime,
            d: self.copies,
            c: 1,
            generator: self.generator,
            permutation: self.permutation.clone(),
            basis: self.basis.clone(),
            summed_vector: self.summed_vector.clone(),
            relation: GroupRingElement::from_coeffs(self.relation_coeffs.clone()),
            cofactor: GroupRingElement::from_coeffs(self.cofactor_coeffs.clone()),
            n: self.integer_n.clone(),
        };
        cert.verify()?;
        Ok(cert)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Parses and verifies one document.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: CertificateDocument = serde_json::from_str(text)?;
        doc.verify()?;
        Ok(doc)
    }
}

/// Parses and verifies a JSON array of documents, as written by `certify --format json`.
pub fn load_documents(text: &str) -> Result<Vec<CertificateDocument>, CliError> {
    let docs: Vec<CertificateDocument> = serde_json::from_str(text)?;
    for d in &docs {
        d.verify()?;
    }
    Ok(docs)
}
