use std::path::PathBuf;

use pizza_core::partition::PartitionConfig;
use pizza_core::sections::SearchConfig;
use pizza_core::tol::{EPS_FAIR, EPS_SEC};

use crate::error::AppError;

/// Settings shared by the subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Slices for `partition`, steps for `chain`.
    pub n: usize,
    pub eps_sec: f64,
    pub eps_fair: f64,
    /// Direction samples for scans and profiles.
    pub theta_samples: usize,
    pub disk_vertices: usize,
    pub seed: u64,
    pub output_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 2,
            eps_sec: EPS_SEC,
            eps_fair: EPS_FAIR,
            theta_samples: 1024,
            disk_vertices: 512,
            seed: 0,
            output_dir: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), AppError> {
        let bad = |msg: String| Err(AppError::InvalidInput(msg));
        if self.n < 2 {
            return bad(format!("--n must be at least 2, got {}", self.n));
        }
        if self.theta_samples < 16 {
            return bad(format!(
                "--theta-samples must be at least 16, got {}",
                self.theta_samples
            ));
        }
        if self.disk_vertices < 64 {
            return bad(format!(
                "disk polygons need at least 64 vertices, got {}",
                self.disk_vertices
            ));
        }
        for (flag, v) in [("--eps-sec", self.eps_sec), ("--tol", self.eps_fair)] {
            if !(v > 0.0 && v < 1.0) {
                return bad(format!("{flag} must lie in (0, 1), got {v}"));
            }
        }
        Ok(())
    }

    pub fn search(&self) -> SearchConfig {
        SearchConfig {
            scan_samples: self.theta_samples,
            eps_sec: self.eps_sec,
            ..SearchConfig::default()
        }
    }

    pub fn partition(&self) -> PartitionConfig {
        PartitionConfig {
            search: self.search(),
            eps_fair: self.eps_fair,
        }
    }
}
