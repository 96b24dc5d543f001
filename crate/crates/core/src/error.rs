use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error in {path}: {detail}")]
    Parse { path: String, detail: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("distribution power flow diverged after {iterations} iterations (last voltage update {mismatch:.3e} pu)")]
    DistPfDiverged { iterations: usize, mismatch: f64 },

    #[error("transmission power flow did not converge after {iterations} iterations (max mismatch {mismatch:.3e} pu)")]
    TransPfDiverged { iterations: usize, mismatch: f64 },

    #[error("transmission Jacobian singular at iteration {0}")]
    SingularJacobian(usize),

    #[error("outage of branch {branch} islands bus {bus}")]
    Islanded { branch: String, bus: String },

    #[error("QP infeasible: most violated constraint `{constraint}` by {violation:.3e}")]
    QpInfeasible { constraint: String, violation: f64 },

    #[error("QP did not reach optimality in {0} active-set iterations")]
    QpIterationLimit(usize),

    #[error("boundary iteration did not converge in {rounds} rounds (|dV|={dv:.3e} pu, |dS|={ds:.3e} MVA)")]
    BoundaryDiverged { rounds: usize, dv: f64, ds: f64 },

    #[error("dispatch verification infeasible after corrective re-solve: {0}")]
    VerificationInfeasible(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("scenario failed at t={t}: {source}")]
    Scenario {
        t: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Wrap an error with the simulation time at which it occurred.
    pub fn at_time(self, t: f64) -> Error {
        Error::Scenario {
            t,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
