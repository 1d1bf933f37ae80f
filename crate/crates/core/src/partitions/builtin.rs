use super::PartitionError;
use crate::energy::DifferenceProfile;

const G2_MAIN: &str = include_str!("../../data/g2_main.profile");
const PRIMC: &str = include_str!("../../data/primc.profile");
const DOUSSE_LOVEJOY: &str = include_str!("../../data/dousse_lovejoy.profile");
const RR1: &str = include_str!("../../data/rr1.profile");
const RR2: &str = include_str!("../../data/rr2.profile");

/// Tags accepted by [`builtin_profile`].
pub const BUILTIN_PROFILES: [&str; 5] = ["g2", "primc", "dousse-lovejoy", "rr1", "rr2"];

pub fn builtin_profile_source(tag: &str) -> Option<&'static str> {
    match tag {
        "g2" => Some(G2_MAIN),
        "primc" => Some(PRIMC),
        "dousse-lovejoy" => Some(DOUSSE_LOVEJOY),
        "rr1" => Some(RR1),
        "rr2" => Some(RR2),
        _ => None,
    }
}

pub fn builtin_profile(tag: &str) -> Result<DifferenceProfile, PartitionError> {
    let source = builtin_profile_source(tag).ok_or_else(|| PartitionError::UnknownProfile(tag.to_string()))?;
    Ok(DifferenceProfile::parse(source)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_parses_and_round_trips() {
        for tag in BUILTIN_PROFILES {
            let p = builtin_profile(tag).unwrap();
            assert_eq!(DifferenceProfile::parse(&p.render()).unwrap(), p, "{tag}");
        }
        assert!(builtin_profile("nope").is_err());
    }
}
