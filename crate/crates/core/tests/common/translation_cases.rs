//! Hand-constructed translation regression cases. Expected outputs follow
//! the rule table documented in `syllogism::parser`.

use syllogism::parser::PhraseologyCategory as Cat;

pub struct Case {
    pub text: &'static str,
    pub category: Cat,
    /// `(type letter, subject, predicate)`; empty when untranslatable.
    pub expected: &'static [(char, &'static str, &'static str)],
    pub trace: &'static [&'static str],
}

const fn case(
    text: &'static str,
    category: Cat,
    expected: &'static [(char, &'static str, &'static str)],
    trace: &'static [&'static str],
) -> Case {
    Case {
        text,
        category,
        expected,
        trace,
    }
}

pub const CASES: &[Case] = &[
    // standard
    case(
        "All dogs are mammals.",
        Cat::Standard,
        &[('A', "dogs", "mammals")],
        &["T-STD"],
    ),
    case(
        "No reptiles are mammals.",
        Cat::Standard,
        &[('E', "reptiles", "mammals")],
        &["T-STD"],
    ),
    case(
        "Some students are athletes.",
        Cat::Standard,
        &[('I', "students", "athletes")],
        &["T-STD"],
    ),
    case(
        "Some politicians are not lawyers.",
        Cat::Standard,
        &[('O', "politicians", "lawyers")],
        &["T-STD"],
    ),
    case("No S is P.", Cat::Standard, &[('E', "s", "p")], &["T-STD"]),
    // singular
    case(
        "Socrates is a human.",
        Cat::Singular,
        &[('A', "persons-identical-to-socrates", "humans")],
        &["T-SING"],
    ),
    case(
        "Socrates is not a Spartan.",
        Cat::Singular,
        &[('E', "persons-identical-to-socrates", "spartans")],
        &["T-SING"],
    ),
    case(
        "Plato is wise.",
        Cat::Singular,
        &[('A', "persons-identical-to-plato", "wise-people")],
        &["T-SING", "T-PRED"],
    ),
    case(
        "The Eiffel Tower is a landmark.",
        Cat::Singular,
        &[('A', "things-identical-to-eiffel-tower", "landmarks")],
        &["T-SING"],
    ),
    case(
        "This car is not a convertible.",
        Cat::Singular,
        &[('E', "things-identical-to-car", "convertibles")],
        &["T-SING"],
    ),
    // conditional
    case(
        "If something is a dog, then it is a mammal.",
        Cat::Conditional,
        &[('A', "dogs", "mammals")],
        &["T-COND"],
    ),
    case(
        "If an animal is a whale then it is not a fish.",
        Cat::Conditional,
        &[('E', "whales", "fish")],
        &["T-COND"],
    ),
    case(
        "If something is not a citizen, then it is a foreigner.",
        Cat::Conditional,
        &[('A', "non-citizens", "foreigners")],
        &["T-COND"],
    ),
    case(
        "If someone is honest, then he is reliable.",
        Cat::Conditional,
        &[('A', "honest-people", "reliable-people")],
        &["T-COND"],
    ),
    case(
        "If a thing is a square, it is a rectangle.",
        Cat::Conditional,
        &[('A', "squares", "rectangles")],
        &["T-COND"],
    ),
    // exclusive
    case(
        "Only citizens are voters.",
        Cat::Exclusive,
        &[('A', "voters", "citizens")],
        &["T-EXCL"],
    ),
    case(
        "None but members are admitted.",
        Cat::Exclusive,
        &[('A', "admitted-people", "members")],
        &["T-EXCL", "T-PRED"],
    ),
    case(
        "None except employees are eligible.",
        Cat::Exclusive,
        &[('A', "eligible-people", "employees")],
        &["T-EXCL", "T-PRED"],
    ),
    case(
        "Only mammals are whales.",
        Cat::Exclusive,
        &[('A', "whales", "mammals")],
        &["T-EXCL"],
    ),
    case(
        "Only members can vote.",
        Cat::Exclusive,
        &[('A', "people-who-can-vote", "members")],
        &["T-EXCL", "T-PRED"],
    ),
    // exceptive
    case(
        "All except employees are admitted.",
        Cat::Exceptive,
        &[
            ('E', "employees", "admitted-people"),
            ('A', "non-employees", "admitted-people"),
        ],
        &["T-EXCEPT", "T-PRED"],
    ),
    case(
        "All but students are eligible.",
        Cat::Exceptive,
        &[
            ('E', "students", "eligible-people"),
            ('A', "non-students", "eligible-people"),
        ],
        &["T-EXCEPT", "T-PRED"],
    ),
    case(
        "Everyone except managers is welcome.",
        Cat::Exceptive,
        &[
            ('E', "managers", "welcome-people"),
            ('A', "non-managers", "welcome-people"),
        ],
        &["T-EXCEPT", "T-PRED"],
    ),
    case(
        "All except trucks are cars.",
        Cat::Exceptive,
        &[('E', "trucks", "cars"), ('A', "non-trucks", "cars")],
        &["T-EXCEPT"],
    ),
    // non-standard quantifiers
    case(
        "Few dogs bite.",
        Cat::NonstandardQuantifier,
        &[('I', "dogs", "things-that-bite"), ('O', "dogs", "things-that-bite")],
        &["T-NSQ", "T-PRED"],
    ),
    case(
        "A few students are athletes.",
        Cat::NonstandardQuantifier,
        &[('I', "students", "athletes")],
        &["T-NSQ"],
    ),
    case(
        "Not every dog is a pet.",
        Cat::NonstandardQuantifier,
        &[('O', "dogs", "pets")],
        &["T-NSQ"],
    ),
    case(
        "Anyone who is a citizen is a voter.",
        Cat::NonstandardQuantifier,
        &[('A', "citizens", "voters")],
        &["T-NSQ"],
    ),
    case(
        "No one is perfect.",
        Cat::NonstandardQuantifier,
        &[('E', "persons", "perfect-people")],
        &["T-NSQ", "T-PRED"],
    ),
    case(
        "Nothing is eternal.",
        Cat::NonstandardQuantifier,
        &[('E', "things", "eternal-things")],
        &["T-NSQ", "T-PRED"],
    ),
    case(
        "Every cat is a mammal.",
        Cat::NonstandardQuantifier,
        &[('A', "cats", "mammals")],
        &["T-NSQ"],
    ),
    case(
        "Whoever is a thief is a criminal.",
        Cat::NonstandardQuantifier,
        &[('A', "thieves", "criminals")],
        &["T-NSQ"],
    ),
    // unexpressed quantifier
    case(
        "Dogs are mammals.",
        Cat::UnexpressedQuantifier,
        &[('I', "dogs", "mammals")],
        &["T-UNEXP", "LOW-CONFIDENCE"],
    ),
    case(
        "Whales are not fish.",
        Cat::UnexpressedQuantifier,
        &[('O', "whales", "fish")],
        &["T-UNEXP", "LOW-CONFIDENCE"],
    ),
    case(
        "Children are curious.",
        Cat::UnexpressedQuantifier,
        &[('I', "children", "curious-people")],
        &["T-UNEXP", "LOW-CONFIDENCE", "T-PRED"],
    ),
    case(
        "Birds fly.",
        Cat::UnexpressedQuantifier,
        &[('I', "birds", "things-that-fly")],
        &["T-UNEXP", "LOW-CONFIDENCE", "T-PRED"],
    ),
    case(
        "Students do not smoke.",
        Cat::UnexpressedQuantifier,
        &[('O', "students", "people-who-smoke")],
        &["T-UNEXP", "LOW-CONFIDENCE", "T-PRED"],
    ),
    // non-standard predicate
    case(
        "All men are mortal.",
        Cat::NonstandardPredicate,
        &[('A', "men", "mortal-people")],
        &["T-PRED"],
    ),
    case(
        "Some flowers are beautiful.",
        Cat::NonstandardPredicate,
        &[('I', "flowers", "beautiful-things")],
        &["T-PRED"],
    ),
    case(
        "No dogs bark loudly.",
        Cat::NonstandardPredicate,
        &[('E', "dogs", "things-that-bark-loudly")],
        &["T-PRED"],
    ),
    case(
        "Some students play chess.",
        Cat::NonstandardPredicate,
        &[('I', "students", "people-who-play-chess")],
        &["T-PRED"],
    ),
    case(
        "All soldiers were brave.",
        Cat::NonstandardPredicate,
        &[('A', "soldiers", "brave-people")],
        &["T-PRED"],
    ),
    case(
        "Some cats do not purr.",
        Cat::NonstandardPredicate,
        &[('O', "cats", "things-that-purr")],
        &["T-PRED"],
    ),
    // outside the controlled fragment
    case("Hello there, friend.", Cat::Other, &[], &[]),
    case("Is every dog a mammal?", Cat::Other, &[], &[]),
    case("All S are not P.", Cat::Other, &[], &[]),
    case("Run!", Cat::Other, &[], &[]),
];
