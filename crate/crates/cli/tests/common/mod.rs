//! Loads the bundled corpus and its oracle values.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use exceptional_core::curve::WeierstrassModel;
use exceptional_core::{BigInt, BigRational};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
pub struct BadPrime {
    pub p: u64,
    pub kodaira: String,
    pub f: u32,
    pub v_disc: u32,
}

#[derive(Debug, Clone, Deserialize)]
pub struct SieveRow {
    pub p: u64,
    pub a: u64,
    pub twisted: bool,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Sieve {
    pub qlist: Vec<i64>,
    pub rows: Vec<SieveRow>,
    pub r: usize,
    pub p_r: u64,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Expected {
    pub label: String,
    pub input: [i64; 5],
    pub minimal: [i64; 5],
    pub j: String,
    pub conductor: u64,
    pub disc: String,
    pub bad: Vec<BadPrime>,
    pub ap: BTreeMap<String, i64>,
    pub isogeny_primes: Vec<u64>,
    pub mod2_nonsurjective: bool,
    pub mode: String,
    pub g: Option<u64>,
    pub sieve: Sieve,
    #[serde(rename = "sieve_S")]
    pub sieve_set: Vec<u64>,
    #[serde(rename = "raw_S")]
    pub raw_set: Vec<u64>,
}

impl Expected {
    pub fn model(&self) -> WeierstrassModel {
        WeierstrassModel::from_ints(self.input).expect("corpus curves are non-singular")
    }

    pub fn j(&self) -> BigRational {
        exceptional_cli::input::parse_rational(&self.j).expect("oracle j parses")
    }

    pub fn disc(&self) -> BigInt {
        self.disc.parse().expect("oracle discriminant parses")
    }
}

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data")
}

pub fn corpus_path() -> PathBuf {
    data_dir().join("corpus.txt")
}

pub fn expected() -> Vec<Expected> {
    let text = std::fs::read_to_string(data_dir().join("expected.json")).expect("expected.json");
    serde_json::from_str(&text).expect("expected.json matches the schema")
}
