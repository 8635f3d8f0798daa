//! Serde helpers writing rationals as strings like "3/2".

#![allow(dead_code)]

use serde::ser::{SerializeSeq, Serializer};

use crate::algebra::Rat;

pub fn rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn rat_pair<S: Serializer>(r: &[Rat; 2], s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&(r[0].to_string(), r[1].to_string()), s)
}

pub fn rat_vec<S: Serializer>(r: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(r.len()))?;
    for x in r {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn rat_pairs<S: Serializer>(r: &[[Rat; 2]], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(r.len()))?;
    for x in r {
        seq.serialize_element(&(x[0].to_string(), x[1].to_string()))?;
    }
    seq.end()
}

pub fn lifted_points<S: Serializer>(r: &[([i64; 2], Rat)], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(r.len()))?;
    for (e, c) in r {
        seq.serialize_element(&(e, c.to_string()))?;
    }
    seq.end()
}

pub fn rat_triples<S: Serializer>(r: &[[Rat; 3]], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(r.len()))?;
    for x in r {
        seq.serialize_element(&(x[0].to_string(), x[1].to_string(), x[2].to_string()))?;
    }
    seq.end()
}

pub fn opt_rat<S: Serializer>(r: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}
