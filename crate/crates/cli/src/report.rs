use frobcode_core::bounds::{check_all, BoundName, BoundReport};
use frobcode_core::families::{residual_chain, ChainCertificate};
use frobcode_core::rational::{serde_pq, Rational};
use frobcode_core::LinearCode;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParameters {
    pub n: usize,
    #[serde(rename = "M")]
    pub size: usize,
    #[serde(rename = "ell_C")]
    pub ell: usize,
    pub min_hamming: Option<usize>,
    #[serde(with = "serde_pq::option")]
    pub d_over_gamma: Option<Rational>,
}

impl CodeParameters {
    pub fn of(code: &LinearCode) -> Self {
        CodeParameters {
            n: code.n(),
            size: code.size(),
            ell: code.ell(),
            min_hamming: code.min_hamming(),
            d_over_gamma: code.min_hom_norm(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub sharp: Vec<BoundName>,
    pub satisfied: Vec<BoundName>,
    pub violated: Vec<BoundName>,
    pub inapplicable: Vec<BoundName>,
    pub chain_verified: Option<bool>,
}

impl Verdict {
    pub fn of(bounds: &[BoundReport], chain: Option<&ChainCertificate>) -> Self {
        let names = |f: &dyn Fn(&BoundReport) -> bool| bounds.iter().filter(|r| f(r)).map(|r| r.bound).collect();
        Verdict {
            sharp: names(&|r| r.applicable && r.sharp),
            satisfied: names(&|r| r.applicable && r.satisfied),
            violated: names(&|r| r.applicable && !r.satisfied),
            inapplicable: names(&|r| !r.applicable),
            chain_verified: chain.filter(|c| c.checks.n_at_most_d_over_gamma).map(ChainCertificate::verified),
        }
    }

    /// No applicable bound failed and no chain certificate failed.
    pub fn ok(&self) -> bool {
        self.violated.is_empty() && self.chain_verified != Some(false)
    }
}

/// Everything the tool knows about one code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub ring: String,
    #[serde(with = "serde_pq")]
    pub gamma: Rational,
    pub code: CodeParameters,
    pub bounds: Vec<BoundReport>,
    #[serde(default)]
    pub chain: Option<ChainCertificate>,
    pub verdict: Verdict,
}

impl Report {
    pub fn of(code: &LinearCode) -> Self {
        let bounds = check_all(code);
        let chain = residual_chain(code).certificate;
        let verdict = Verdict::of(&bounds, Some(&chain));
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            ring: code.ring().spec().to_string(),
            gamma: code.table().gamma().clone(),
            code: CodeParameters::of(code),
            bounds,
            chain: Some(chain),
            verdict,
        }
    }
}
