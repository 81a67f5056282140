//! Fiber-by-fiber check of the contraction family of `(so(p+d,q), θ_{p,d,q})`
//! against the trichotomy: `g` for `α > 0`, `k ⋉ p` at `α = 0`, `g*` for
//! `α < 0`.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::family::{contraction_family, fiber_isomorphism_certificate, FiberCertificate};
use crate::lie::{fingerprint, Fingerprint};
use crate::scalars::Rational;
use crate::so_catalog::{build_reference, SOParams, SoPair};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateStatus {
    Verified,
    Failed,
    #[serde(rename = "absent (non-square)")]
    AbsentNonSquare,
}

impl fmt::Display for CertificateStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateStatus::Verified => "verified",
            CertificateStatus::Failed => "failed",
            CertificateStatus::AbsentNonSquare => "absent (non-square)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaRecord {
    pub alpha: String,
    pub fingerprint: Fingerprint,
    /// Catalog name of the algebra the fiber is compared with.
    pub expected: String,
    pub fingerprint_equal: bool,
    pub certificate: CertificateStatus,
    /// Fingerprint match, plus a verified certificate whenever `|α|` is a
    /// rational square.
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub params: SOParams,
    pub records: Vec<AlphaRecord>,
    pub pass: bool,
}

/// Catalog name of the expected fiber at `α`.
pub fn expected_reference(params: SOParams, alpha: &Rational) -> String {
    let SOParams { p, d, q } = params;
    if alpha.is_positive() {
        format!("so:{},{}", p + d, q)
    } else if alpha.is_negative() {
        format!("so:{},{}", p, d + q)
    } else {
        format!("motion:{p},{d},{q}")
    }
}

pub fn cmd_verify(params: SOParams, alphas: &[Rational]) -> Result<VerifyReport, Error> {
    let sp = SoPair::new(params);
    let fam = contraction_family(&sp.pair);
    let mut records = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        let fiber = fam.fiber(alpha);
        let fp = fingerprint(&fiber);
        let expected = expected_reference(params, alpha);
        let fingerprint_equal = fingerprint(&build_reference(&expected)?) == fp;
        let certificate = match fiber_isomorphism_certificate(&sp.pair, &fam, alpha)? {
            FiberCertificate::Verified { .. } => CertificateStatus::Verified,
            FiberCertificate::Unavailable => CertificateStatus::AbsentNonSquare,
            FiberCertificate::Failed(_) => CertificateStatus::Failed,
        };
        let pass = fingerprint_equal && certificate != CertificateStatus::Failed;
        records.push(AlphaRecord { alpha: alpha.to_string(), fingerprint: fp, expected, fingerprint_equal, certificate, pass });
    }
    let pass = records.iter().all(|r| r.pass);
    Ok(VerifyReport { params, records, pass })
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify ({})", self.params)?;
        for r in &self.records {
            writeln!(
                f,
                "  alpha = {:>6}  expected {:<14} fingerprint-{}  certificate {}  {}",
                r.alpha,
                r.expected,
                if r.fingerprint_equal { "equal" } else { "differs" },
                r.certificate,
                if r.pass { "pass" } else { "FAIL" }
            )?;
        }
        write!(f, "summary: {}", if self.pass { "pass" } else { "fail" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational;

    #[test]
    fn so3_all_pass_with_certificates() {
        let alphas: Vec<Rational> = [-4, -1, 0, 1, 4].iter().map(|&a| rational(a, 1)).collect();
        let r = cmd_verify(SOParams::new(2, 1, 0).unwrap(), &alphas).unwrap();
        assert!(r.pass, "{r}");
        assert!(r.records.iter().all(|x| x.certificate == CertificateStatus::Verified));
        assert_eq!(r.records[0].expected, "so:2,1");
        assert_eq!(r.records[2].expected, "motion:2,1,0");
    }

    #[test]
    fn so21_contraction_matches_motion() {
        let alphas = [rational(-1, 1), rational(0, 1), rational(1, 1)];
        let r = cmd_verify(SOParams::new(1, 1, 1).unwrap(), &alphas).unwrap();
        assert!(r.pass, "{r}");
        assert_eq!(r.records[1].expected, "motion:1,1,1");
    }

    #[test]
    fn non_square_is_fingerprint_only() {
        let r = cmd_verify(SOParams::new(2, 1, 0).unwrap(), &[rational(1, 3)]).unwrap();
        assert_eq!(r.records[0].certificate, CertificateStatus::AbsentNonSquare);
        assert!(r.pass);
        let json = serde_json::to_string(&r.records[0]).unwrap();
        assert!(json.contains("\"absent (non-square)\""), "{json}");
    }
}
