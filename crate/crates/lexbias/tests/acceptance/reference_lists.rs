//! Independent transcriptions of the canonical word lists, kept in their
//! original order with any repeated entries preserved. The acceptance test
//! derives the shipped builtin from each raw sequence (first-occurrence
//! dedup) so that an accidental edit to a fixture file fails loudly against
//! a second copy.

pub const MAN: &[&str] = &[
    "he", "son", "his", "him", "father", "man", "boy", "himself", "male", "brother", "sons",
    "fathers", "men", "boys", "males", "brothers", "uncle", "uncles", "nephew", "nephews"
];

pub const WOMAN: &[&str] = &[
    "she", "daughter", "hers", "her", "mother", "woman", "girl", "herself", "female", "sister",
    "daughters", "mothers", "women", "girls", "femen", "sisters", "aunt", "aunts", "niece",
    "nieces"
];

pub const WHITE_SURNAMES: &[&str] = &[
    "harris", "nelson", "robinson", "thompson", "moore", "wright", "anderson", "clark",
    "jackson", "taylor", "scott", "davis", "allen", "adams", "lewis", "williams", "jones",
    "wilson", "martin", "johnson"
];

pub const HISPANIC_SURNAMES: &[&str] = &[
    "ruiz", "alvarez", "vargas", "castillo", "gomez", "soto", "gonzalez", "sanchez", "rivera",
    "mendoza", "martinez", "torres", "rodriguez", "perez", "lopez", "medina", "diaz", "garcia",
    "castro", "cruz"
];

pub const ASIAN_SURNAMES: &[&str] = &[
    "cho", "wong", "tang", "huang", "chu", "chung", "ng", "wu", "liu", "chen", "lin", "yang",
    "kim", "chang", "shah", "wang", "li", "khan", "singh", "hong"
];

pub const RUSSIAN_SURNAMES: &[&str] = &[
    "gurin", "minsky", "sokolov", "markov", "maslow", "novikoff", "mishkin", "smirnov",
    "orloff", "ivanov", "sokoloff", "davidoff", "savin", "romanoff", "babinski", "sorokin",
    "levin", "pavlov", "rodin", "agin"
];

pub const ISLAM: &[&str] = &[
    "allah", "ramadan", "turban", "emir", "salaam", "sunni", "koran", "imam", "sultan",
    "prophet", "veil", "ayatollah", "shiite", "mosque", "islam", "sheik", "muslim", "muhammad"
];

pub const CHRISTIANITY: &[&str] = &[
    "baptism", "messiah", "catholicism", "resurrection", "christianity", "salvation",
    "protestant", "gospel", "trinity", "jesus", "christ", "christian", "cross", "catholic",
    "church"
];

pub const OCCUPATIONS: &[&str] = &[
    "janitor", "statistician", "midwife", "bailiff", "auctioneer", "photographer", "geologist",
    "shoemaker", "athlete", "cashier", "dancer", "housekeeper", "accountant", "physicist",
    "gardener", "dentist", "weaver", "blacksmith", "psychologist", "supervisor",
    "mathematician", "surveyor", "tailor", "designer", "economist", "mechanic", "laborer",
    "postmaster", "broker", "chemist", "librarian", "attendant", "clerical", "musician",
    "porter", "scientist", "carpenter", "sailor", "instructor", "sheriff", "pilot", "inspector",
    "mason", "baker", "administrator", "architect", "collector", "operator", "surgeon",
    "driver", "painter", "conductor", "nurse", "cook", "engineer", "retired", "sales", "lawyer",
    "clergy", "physician", "farmer", "clerk", "manager", "guard", "artist", "smith", "official",
    "police", "doctor", "professor", "student", "judge", "teacher", "author", "secretary",
    "soldier"
];

pub const PROFESSIONAL_OCCUPATIONS: &[&str] = &[
    "statistician", "auctioneer", "photographer", "geologist", "accountant", "physicist",
    "dentist", "psychologist", "supervisor", "mathematician", "designer", "economist",
    "postmaster", "broker", "chemist", "librarian", "scientist", "instructor", "pilot",
    "administrator", "architect", "surgeon", "nurse", "engineer", "lawyer", "physician",
    "manager", "official", "doctor", "professor", "student", "judge", "teacher", "author"
];

pub const STEREOTYPE_OCCUPATIONS: &[&str] = &[
    "teacher", "author", "mechanic", "broker", "baker", "surveyor", "laborer", "surgeon",
    "gardener", "painter", "dentist", "janitor", "athlete", "manager", "conductor", "carpenter",
    "housekeeper", "secretary", "economist", "geologist", "clerk", "doctor", "judge",
    "physician", "lawyer", "artist", "instructor", "dancer", "photographer", "inspector",
    "musician", "soldier", "librarian", "professor", "psychologist", "nurse", "sailor",
    "accountant", "architect", "chemist", "administrator", "physicist", "scientist", "farmer"
];

pub const WILLIAMS_ADJECTIVES: &[&str] = &[
    "headstrong", "thankless", "tactful", "distrustful", "quarrelsome", "effeminate", "fickle",
    "talkative", "dependable", "resentful", "sarcastic", "unassuming", "changeable",
    "resourceful", "persevering", "forgiving", "assertive", "individualistic", "vindictive",
    "sophisticated", "deceitful", "impulsive", "sociable", "methodical", "idealistic",
    "thrifty", "outgoing", "intolerant", "autocratic", "conceited", "inventive", "dreamy",
    "appreciative", "forgetful", "forceful", "submissive", "pessimistic", "versatile",
    "adaptable", "reflective", "inhibited", "outspoken", "quitting", "unselfish", "immature",
    "painstaking", "leisurely", "infantile", "sly", "praising", "cynical", "irresponsible",
    "arrogant", "obliging", "unkind", "wary", "greedy", "obnoxious", "irritable", "discreet",
    "frivolous", "cowardly", "rebellious", "adventurous", "enterprising", "unscrupulous",
    "poised", "moody", "unfriendly", "optimistic", "disorderly", "peaceable", "considerate",
    "humorous", "worrying", "preoccupied", "trusting", "mischievous", "robust", "superstitious",
    "noisy", "tolerant", "realistic", "masculine", "witty", "informal", "prejudiced",
    "reckless", "jolly", "courageous", "meek", "stubborn", "aloof", "sentimental",
    "complaining", "unaffected", "cooperative", "unstable", "feminine", "timid", "retiring",
    "relaxed", "imaginative", "shrewd", "conscientious", "industrious", "hasty", "commonplace",
    "lazy", "gloomy", "thoughtful", "dignified", "wholesome", "affectionate", "aggressive",
    "awkward", "energetic", "tough", "shy", "queer", "careless", "restless", "cautious",
    "polished", "tense", "suspicious", "dissatisfied", "ingenious", "fearful", "daring",
    "persistent", "demanding", "impatient", "contented", "selfish", "rude", "spontaneous",
    "conventional", "cheerful", "enthusiastic", "modest", "ambitious", "alert", "defensive",
    "mature", "coarse", "charming", "clever", "shallow", "deliberate", "stern", "emotional",
    "rigid", "mild", "cruel", "artistic", "hurried", "sympathetic", "dull", "civilized",
    "loyal", "withdrawn", "confident", "indifferent", "conservative", "foolish", "moderate",
    "handsome", "helpful", "gentle", "dominant", "hostile", "generous", "reliable", "sincere",
    "precise", "calm", "healthy", "attractive", "progressive", "confused", "rational", "stable",
    "bitter", "sensitive", "initiative", "loud", "thorough", "logical", "intelligent", "steady",
    "formal", "complicated", "cool", "curious", "reserved", "silent", "honest", "quick",
    "friendly", "efficient", "pleasant", "severe", "peculiar", "quiet", "weak", "anxious",
    "nervous", "warm", "slow", "dependent", "wise", "organized", "affected", "reasonable",
    "capable", "active", "independent", "patient", "practical", "serious", "understanding",
    "cold", "responsible", "simple", "original", "strong", "determined", "natural", "kind"
];

pub const ADJECTIVES: &[&str] = &[
    "disorganized", "devious", "impressionable", "circumspect", "impassive", "aimless",
    "effeminate", "unfathomable", "fickle", "unprincipled", "inoffensive", "reactive",
    "providential", "resentful", "bizarre", "impractical", "sarcastic", "misguided",
    "imitative", "pedantic", "venomous", "erratic", "insecure", "resourceful", "neurotic",
    "forgiving", "profligate", "whimsical", "assertive", "incorruptible", "individualistic",
    "faithless", "disconcerting", "barbaric", "hypnotic", "vindictive", "observant",
    "dissolute", "frightening", "complacent", "boisterous", "pretentious", "disobedient",
    "tasteless", "sedentary", "sophisticated", "regimental", "mellow", "deceitful", "impulsive",
    "playful", "sociable", "methodical", "willful", "idealistic", "boyish", "callous",
    "pompous", "unchanging", "crafty", "punctual", "compassionate", "intolerant", "challenging",
    "scornful", "possessive", "conceited", "imprudent", "dutiful", "lovable", "disloyal",
    "dreamy", "appreciative", "forgetful", "unrestrained", "forceful", "submissive",
    "predatory", "fanatical", "illogical", "tidy", "aspiring", "studious", "adaptable",
    "conciliatory", "artful", "thoughtless", "deceptive", "frugal", "reflective", "insulting",
    "unreliable", "stoic", "hysterical", "rustic", "inhibited", "outspoken", "unhealthy",
    "ascetic", "skeptical", "painstaking", "contemplative", "leisurely", "sly", "mannered",
    "outrageous", "lyrical", "placid", "cynical", "irresponsible", "vulnerable", "arrogant",
    "persuasive", "perverse", "steadfast", "crisp", "envious", "naive", "greedy",
    "presumptuous", "obnoxious", "irritable", "dishonest", "discreet", "sporting", "hateful",
    "ungrateful", "frivolous", "reactionary", "skillful", "cowardly", "sordid", "adventurous",
    "dogmatic", "intuitive", "bland", "indulgent", "discontented", "dominating", "articulate",
    "fanciful", "discouraging", "treacherous", "repressed", "moody", "sensual", "unfriendly",
    "optimistic", "clumsy", "contemptible", "focused", "haughty", "morbid", "disorderly",
    "considerate", "humorous", "preoccupied", "airy", "impersonal", "cultured", "trusting",
    "respectful", "scrupulous", "scholarly", "superstitious", "tolerant", "realistic",
    "malicious", "irrational", "sane", "colorless", "masculine", "witty", "inert", "prejudiced",
    "fraudulent", "blunt", "childish", "brittle", "disciplined", "responsive", "courageous",
    "bewildered", "courteous", "stubborn", "aloof", "sentimental", "athletic", "extravagant",
    "brutal", "manly", "cooperative", "unstable", "youthful", "timid", "amiable", "retiring",
    "fiery", "confidential", "relaxed", "imaginative", "mystical", "shrewd", "conscientious",
    "monstrous", "grim", "questioning", "lazy", "dynamic", "gloomy", "troublesome", "abrupt",
    "eloquent", "dignified", "hearty", "gallant", "benevolent", "maternal", "paternal",
    "patriotic", "aggressive", "competitive", "elegant", "flexible", "gracious", "energetic",
    "tough", "contradictory", "shy", "careless", "cautious", "polished", "sage", "tense",
    "caring", "suspicious", "sober", "neat", "transparent", "disturbing", "passionate",
    "obedient", "crazy", "restrained", "fearful", "daring", "prudent", "demanding", "impatient",
    "cerebral", "calculating", "amusing", "honorable", "casual", "sharing", "selfish", "ruined",
    "spontaneous", "admirable", "conventional", "cheerful", "solitary", "upright", "stiff",
    "enthusiastic", "petty", "dirty", "subjective", "heroic", "stupid", "modest", "impressive",
    "orderly", "ambitious", "protective", "silly", "alert", "destructive", "exciting", "crude",
    "ridiculous", "subtle", "mature", "creative", "coarse", "passive", "oppressed",
    "accessible", "charming", "clever", "decent", "miserable", "superficial", "shallow",
    "stern", "winning", "balanced", "emotional", "rigid", "invisible", "desperate", "cruel",
    "romantic", "agreeable", "hurried", "sympathetic", "solemn", "systematic", "vague",
    "peaceful", "humble", "dull", "expedient", "loyal", "decisive", "arbitrary", "earnest",
    "confident", "conservative", "foolish", "moderate", "helpful", "delicate", "gentle",
    "dedicated", "hostile", "generous", "reliable", "dramatic", "precise", "calm", "healthy",
    "attractive", "artificial", "progressive", "odd", "confused", "rational", "brilliant",
    "intense", "genuine", "mistaken", "driving", "stable", "objective", "sensitive", "neutral",
    "strict", "angry", "profound", "smooth", "ignorant", "thorough", "logical", "intelligent",
    "extraordinary", "experimental", "steady", "formal", "faithful", "curious", "reserved",
    "honest", "busy", "educated", "liberal", "friendly", "efficient", "sweet", "surprising",
    "mechanical", "clean", "critical", "criminal", "soft", "proud", "quiet", "weak", "anxious",
    "solid", "complex", "grand", "warm", "slow", "false", "extreme", "narrow", "dependent",
    "wise", "organized", "pure", "directed", "dry", "obvious", "popular", "capable", "secure",
    "active", "independent", "ordinary", "fixed", "practical", "serious", "fair",
    "understanding", "constant", "cold", "responsible", "deep", "religious", "private",
    "simple", "physical", "original", "working", "strong", "modern", "determined", "open",
    "political", "difficult", "knowledge", "kind"
];

pub const INTELLECTUAL_ADJECTIVES: &[&str] = &[
    "precocious", "resourceful", "inquisitive", "sagacious", "inventive", "astute", "adaptable",
    "reflective", "discerning", "intuitive", "inquiring", "judicious", "analytical", "luminous",
    "venerable", "imaginative", "shrewd", "thoughtful", "sage", "smart", "ingenious", "clever",
    "brilliant", "logical", "intelligent", "apt", "genius", "wise"
];

pub const APPEARANCE_ADJECTIVES: &[&str] = &[
    "alluring", "voluptuous", "blushing", "homely", "plump", "sensual", "gorgeous", "slim",
    "bald", "athletic", "fashionable", "stout", "ugly", "muscular", "slender", "feeble",
    "handsome", "healthy", "attractive", "fat", "weak", "thin", "pretty", "beautiful", "strong"
];

pub const TERRORISM: &[&str] = &[
    "terror", "terrorism", "violence", "attack", "death", "military", "war", "radical",
    "injuries", "bomb", "target", "conflict", "dangerous", "kill", "murder", "strike", "dead",
    "violence", "fight", "death", "force", "stronghold", "wreckage", "aggression", "slaughter",
    "execute", "overthrow", "casualties", "massacre", "retaliation", "proliferation", "militia",
    "hostility", "debris", "acid", "execution", "militant", "rocket", "guerrilla", "sacrifice",
    "enemy", "soldier", "terrorist", "missile", "hostile", "revolution", "resistance", "shoot"
];

pub const OTHER_ADJECTIVES: &[&str] = &[
    "devious", "bizarre", "venomous", "erratic", "barbaric", "frightening", "deceitful",
    "forceful", "deceptive", "envious", "greedy", "hateful", "contemptible", "brutal",
    "monstrous", "calculating", "cruel", "intolerant", "aggressive", "monstrous"
];
