use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::parametric::Family;

/// One row of the local Tamagawa table, identified by its condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// No row applies: good reduction.
    Good,

    C30PowerSplit,
    C30PowerNonsplit,
    C30NineOne,
    C30NineTwo,
    C30NineFour,
    C30ThreeDividesA,

    C3DividesB,
    C3LineSplit,
    C3LineNonsplit,
    C3CubeSplit,
    C3CubeNonsplit,
    C3ThreeLineFour,
    C3ThreeValThreeSquare,
    C3ThreeValThreeNonsquare,
    C3ThreeValSixSquare,
    C3ThreeValSixNonsquare,
    C3ThreeSeven,
    C3ThreeValTwoSquare,
    C3ThreeValTwoNonsquare,
    C3ThreeValTwoMod3,
    C3ThreeLineFiveGeneric,
    C3ThreeLineFiveSpecial,
    C3ThreeLineSixSpecial,
    C3ThreeLineSixGeneric,
    C3ThreeLineHighGeneric,
    C3ThreeLineHighSpecial,
    C3ThreeValOneMod3,

    C5DividesAB,
    C5FormSplit,
    C5FormNonsplit,
    C5FiveOnce,
    C5FiveTwice,

    C7DividesN,
    C7FormSplit,
    C7FormNonsplit,
    C7Seven,
}

use Rule::*;

impl Rule {
    pub const ALL: [Rule; 37] = [
        Good,
        C30PowerSplit,
        C30PowerNonsplit,
        C30NineOne,
        C30NineTwo,
        C30NineFour,
        C30ThreeDividesA,
        C3DividesB,
        C3LineSplit,
        C3LineNonsplit,
        C3CubeSplit,
        C3CubeNonsplit,
        C3ThreeLineFour,
        C3ThreeValThreeSquare,
        C3ThreeValThreeNonsquare,
        C3ThreeValSixSquare,
        C3ThreeValSixNonsquare,
        C3ThreeSeven,
        C3ThreeValTwoSquare,
        C3ThreeValTwoNonsquare,
        C3ThreeValTwoMod3,
        C3ThreeLineFiveGeneric,
        C3ThreeLineFiveSpecial,
        C3ThreeLineSixSpecial,
        C3ThreeLineSixGeneric,
        C3ThreeLineHighGeneric,
        C3ThreeLineHighSpecial,
        C3ThreeValOneMod3,
        C5DividesAB,
        C5FormSplit,
        C5FormNonsplit,
        C5FiveOnce,
        C5FiveTwice,
        C7DividesN,
        C7FormSplit,
        C7FormNonsplit,
        C7Seven,
    ];

    /// The family whose table contains this row (`None` for [`Rule::Good`]).
    pub fn family(self) -> Option<Family> {
        let id = self.id();
        if id == "good" {
            None
        } else if id.starts_with("C3^0") {
            Some(Family::C3Zero)
        } else if id.starts_with("C3") {
            Some(Family::C3)
        } else if id.starts_with("C5") {
            Some(Family::C5)
        } else {
            Some(Family::C7)
        }
    }

    /// Stable short identifier, used in CSV output.
    pub fn id(self) -> &'static str {
        match self {
            Good => "good",
            C30PowerSplit => "C3^0:vp(a)>0/p=1(6)",
            C30PowerNonsplit => "C3^0:vp(a)>0/p=2(3)",
            C30NineOne => "C3^0:p=3/a=+-1(9)",
            C30NineTwo => "C3^0:p=3/a=+-2(9)",
            C30NineFour => "C3^0:p=3/a=+-4(9)",
            C30ThreeDividesA => "C3^0:p=3/3|a",
            C3DividesB => "C3:vp(b)>0",
            C3LineSplit => "C3:vp(a-27b)>0/p=1(6)",
            C3LineNonsplit => "C3:vp(a-27b)>0/p=2(3)",
            C3CubeSplit => "C3:vp(a)!=0(3)/p=1(6)",
            C3CubeNonsplit => "C3:vp(a)!=0(3)/p=2(3)",
            C3ThreeLineFour => "C3:p=3/v3(a-27b)=4",
            C3ThreeValThreeSquare => "C3:p=3/v3(a)=3/sym=1",
            C3ThreeValThreeNonsquare => "C3:p=3/v3(a)=3/sym=-1",
            C3ThreeValSixSquare => "C3:p=3/v3(a)>=6/sym=1",
            C3ThreeValSixNonsquare => "C3:p=3/v3(a)>=6/sym=-1",
            C3ThreeSeven => "C3:p=3/t=7(9)",
            C3ThreeValTwoSquare => "C3:p=3/v3(a)=2/sym=1",
            C3ThreeValTwoNonsquare => "C3:p=3/v3(a)=2/sym=-1",
            C3ThreeValTwoMod3 => "C3:p=3/v3(a)=2(3)/>2",
            C3ThreeLineFiveGeneric => "C3:p=3/v3(a-27b)=5/generic",
            C3ThreeLineFiveSpecial => "C3:p=3/v3(a-27b)=5/special",
            C3ThreeLineSixSpecial => "C3:p=3/v3(a-27b)=6/special",
            C3ThreeLineSixGeneric => "C3:p=3/v3(a-27b)=6/generic",
            C3ThreeLineHighGeneric => "C3:p=3/v3(a-27b)>6/generic",
            C3ThreeLineHighSpecial => "C3:p=3/v3(a-27b)>6/special",
            C3ThreeValOneMod3 => "C3:p=3/v3(a)=1(3)",
            C5DividesAB => "C5:vp(ab)>0",
            C5FormSplit => "C5:vp(f5)>0/split",
            C5FormNonsplit => "C5:vp(f5)>0/nonsplit",
            C5FiveOnce => "C5:p=5/v5(a+18b)=1",
            C5FiveTwice => "C5:p=5/v5(a+18b)>=2",
            C7DividesN => "C7:vp(ab(a-b))>0",
            C7FormSplit => "C7:vp(f7)>0/split",
            C7FormNonsplit => "C7:vp(f7)>0/nonsplit",
            C7Seven => "C7:p=7/v7(a+4b)>=1",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Hit counts per rule, for checking that a test range exercises every row.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Coverage {
    hits: BTreeMap<Rule, u64>,
}

impl Coverage {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, rule: Rule) {
        *self.hits.entry(rule).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: &Coverage) {
        for (r, n) in &other.hits {
            *self.hits.entry(*r).or_insert(0) += n;
        }
    }

    pub fn count(&self, rule: Rule) -> u64 {
        self.hits.get(&rule).copied().unwrap_or(0)
    }

    /// Rows of `family` never hit.
    pub fn missing(&self, family: Family) -> Vec<Rule> {
        Rule::ALL
            .iter()
            .copied()
            .filter(|r| r.family() == Some(family) && self.count(*r) == 0)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Rule, u64)> + '_ {
        self.hits.iter().map(|(r, n)| (*r, *n))
    }
}
