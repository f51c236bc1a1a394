//! Size guards that keep exhaustive sweeps at desk scale.
//!
//! Defaults can be overridden from a TOML file, from the `CONNWIDTH_GUARDS`
//! environment variable (`key=val,key=val`) and per invocation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Guards {
    /// Largest ground set accepted when loading an instance.
    pub explicit_max_n: usize,
    /// Largest ground set for the 4^n validation and Lemma-style sweeps.
    pub validate_max_n: usize,
    /// Largest ground set for the subset DP.
    pub dp_max_n: usize,
    /// Largest ground set for the n! brute-force width oracle.
    pub brute_max_n: usize,
    /// Most k-efficient sets whose families may be enumerated.
    pub max_efficient: usize,
    /// Most complement pairs the ideal search will branch over.
    pub max_pairs: usize,
    /// Largest ground set for the direct-quantifier evaluators.
    pub slow_max_n: usize,
    /// Mismatches listed in a report; the total is always counted.
    pub mismatch_cap: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            explicit_max_n: 24,
            validate_max_n: 13,
            dp_max_n: 24,
            brute_max_n: 9,
            max_efficient: 22,
            max_pairs: 20,
            slow_max_n: 8,
            mismatch_cap: 100,
        }
    }
}

impl Guards {
    pub const ENV_VAR: &'static str = "CONNWIDTH_GUARDS";

    pub fn from_toml_str(text: &str) -> Result<Guards> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let parsed: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("{key}: expected a non-negative integer, got {value:?}")))?;
        let slot = match key.trim() {
            "explicit_max_n" => &mut self.explicit_max_n,
            "validate_max_n" => &mut self.validate_max_n,
            "dp_max_n" => &mut self.dp_max_n,
            "brute_max_n" => &mut self.brute_max_n,
            "max_efficient" => &mut self.max_efficient,
            "max_pairs" => &mut self.max_pairs,
            "slow_max_n" => &mut self.slow_max_n,
            "mismatch_cap" => &mut self.mismatch_cap,
            other => return Err(Error::Config(format!("unknown guard {other:?}"))),
        };
        *slot = parsed;
        Ok(())
    }

    /// Applies a comma-separated `key=val` list.
    pub fn apply_overrides(&mut self, list: &str) -> Result<()> {
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("expected key=val, got {item:?}")))?;
            self.set(key, value)?;
        }
        Ok(())
    }

    /// Applies `CONNWIDTH_GUARDS` if it is set.
    pub fn apply_env(&mut self) -> Result<()> {
        match std::env::var(Self::ENV_VAR) {
            Ok(list) => self.apply_overrides(&list),
            Err(_) => Ok(()),
        }
    }

    pub(crate) fn check(what: &'static str, guard: &'static str, value: usize, limit: usize) -> Result<()> {
        if value > limit {
            Err(Error::GuardExceeded {
                what,
                guard,
                value,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
