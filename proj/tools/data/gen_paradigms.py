#!/usr/bin/env python3
"""Writes data/paradigms.tsv, the inflection class inventory.

Run from the repository root: python3 tools/data/gen_paradigms.py
"""
import os

rows = []


def slot(cls, sid, tag, suffix="", transform="none", marker="none"):
    rows.append((cls, sid, tag, suffix, transform, marker))


# ---------------------------------------------------------------- nouns
CASES = ["NOM", "GEN", "DAT", "AKK"]


def noun(cls, gen=("s",), dat=("",), pl="e", dat_pl=None, pl_transform="umlaut",
         weak=None, singular_only=False, base="SUB"):
    slot(cls, "nom_sg", f"{base} NOM @G SIN", "")
    for i, g in enumerate(gen):
        slot(cls, "gen_sg" if i == 0 else f"gen_sg{i + 1}", f"{base} GEN @G SIN", g)
    for i, d in enumerate(dat):
        slot(cls, "dat_sg" if i == 0 else f"dat_sg{i + 1}", f"{base} DAT @G SIN", d)
    slot(cls, "akk_sg", f"{base} AKK @G SIN", weak if weak is not None else "")
    if singular_only:
        return
    if dat_pl is None:
        dat_pl = pl if pl.endswith("n") or pl.endswith("s") else pl + "n"
    slot(cls, "nom_pl", f"{base} NOM @G PLU", pl, pl_transform)
    slot(cls, "gen_pl", f"{base} GEN @G PLU", pl, pl_transform)
    slot(cls, "dat_pl", f"{base} DAT @G PLU", dat_pl, pl_transform)
    slot(cls, "akk_pl", f"{base} AKK @G PLU", pl, pl_transform)


noun("n_e", gen=("es",), pl="e")
noun("n_e_s", gen=("es", "s"), pl="e")
noun("n_e_dat", gen=("es", "s"), dat=("", "e"), pl="e")
noun("n_er", gen=("es",), pl="er")
noun("n_er_s", gen=("es", "s"), pl="er")
noun("n_0", gen=("s",), pl="")
noun("n_0n", gen=("s",), pl="", dat_pl="")
noun("n_s", gen=("s",), pl="s")
noun("n_s_fem", gen=("",), pl="s")
noun("n_en_s", gen=("es", "s"), pl="en")
noun("n_n_s", gen=("s",), pl="n")
noun("n_en_fem", gen=("",), pl="en")
noun("n_n_fem", gen=("",), pl="n")
noun("n_e_fem", gen=("",), pl="e")
noun("n_0_fem", gen=("",), pl="")
noun("n_nen_fem", gen=("",), pl="nen")
noun("n_weak_n", gen=("n",), dat=("n",), weak="n", pl="n")
noun("n_weak_en", gen=("en",), dat=("en",), weak="en", pl="en")
noun("n_sg", gen=("s",), singular_only=True)
noun("n_sg_fem", gen=("",), singular_only=True)
noun("eig", gen=("s",), singular_only=True, base="EIG")

# ---------------------------------------------------------- adjectives
# Union of strong, weak and mixed declension endings; tags carry no declension.
ADJ_ENDINGS = [
    ("e", ["NOM MAS SIN", "NOM FEM SIN", "NOM NEU SIN", "AKK FEM SIN", "AKK NEU SIN", "NOM PLU", "AKK PLU"]),
    ("en", ["GEN MAS SIN", "GEN NEU SIN", "GEN FEM SIN", "DAT MAS SIN", "DAT FEM SIN", "DAT NEU SIN",
            "AKK MAS SIN", "NOM PLU", "GEN PLU", "DAT PLU", "AKK PLU"]),
    ("er", ["NOM MAS SIN", "GEN FEM SIN", "DAT FEM SIN", "GEN PLU"]),
    ("es", ["NOM NEU SIN", "AKK NEU SIN"]),
    ("em", ["DAT MAS SIN", "DAT NEU SIN"]),
]


def adj_decl(cls, prefix_id, base, degree, stem_suffix, transform):
    deg = f" {degree}" if degree else ""
    for ending, feats in ADJ_ENDINGS:
        for f in feats:
            sid = f"{prefix_id}_{ending}_{f.replace(' ', '_').lower()}"
            slot(cls, sid, f"{base} {f}{deg}", stem_suffix + ending, transform)


def adjective(cls, sup="st", pos_transform="none", comp_transform="comp_stem", sup_transform="comp_stem"):
    slot(cls, "pos_adv", "ADJ ADV", "")
    adj_decl(cls, "pos", "ADJ", "", "", pos_transform)
    slot(cls, "kom_adv", "ADJ ADV KOM", "er", comp_transform)
    adj_decl(cls, "kom", "ADJ", "KOM", "er", comp_transform)
    slot(cls, "sup_adv", "ADJ ADV SUP", sup + "en", sup_transform)
    adj_decl(cls, "sup", "ADJ", "SUP", sup, sup_transform)


adjective("a_st")
adjective("a_est", sup="est")
adjective("a_el", pos_transform="elide_e", comp_transform="elide_e", sup_transform="none")
# Adjectives ending in -e (leise, müde): endings attach without a second e.
slot("a_e", "pos_adv", "ADJ ADV", "")
for ending, feats in ADJ_ENDINGS:
    for f in feats:
        slot("a_e", f"pos_{ending}_{f.replace(' ', '_').lower()}", f"ADJ {f}", ending[1:])
slot("a_e", "kom_adv", "ADJ ADV KOM", "r")
for ending, feats in ADJ_ENDINGS:
    for f in feats:
        slot("a_e", f"kom_{ending}_{f.replace(' ', '_').lower()}", f"ADJ {f} KOM", "r" + ending)
slot("a_e", "sup_adv", "ADJ ADV SUP", "sten")
adj_decl("a_e", "sup", "ADJ", "SUP", "st", "none")

# ---------------------------------------------------------------- verbs
PERSONS = [("1PE", "SIN"), ("2PE", "SIN"), ("3PE", "SIN"), ("1PE", "PLU"), ("2PE", "PLU"), ("3PE", "PLU")]
IDS = ["1sg", "2sg", "3sg", "1pl", "2pl", "3pl"]


def finite(cls, prefix, tense, suffixes, transforms):
    for (pe, nu), sid, suf, tr in zip(PERSONS, IDS, suffixes, transforms):
        slot(cls, f"{prefix}_{sid}", f"VER {pe} {nu} {tense}", suf, tr)


def participles(cls):
    adj_decl(cls, "pa2", "ADJ", "", "", "part2_stem")
    adj_decl(cls, "pa1", "PA1", "", "", "pa1_stem")


def weak(cls, inf="en", pres=("e", "st", "t", "en", "t", "en"), pret=("te", "test", "te", "ten", "tet", "ten"),
         kj1=("e", "est", "e", "en", "et", "en"), imp=("e", ""), imp_pl="t", part2="t"):
    slot(cls, "inf", "VER INF", inf)
    finite(cls, "pres", "PRÄ", pres, ["none"] * 6)
    finite(cls, "pret", "PRT", pret, ["none"] * 6)
    finite(cls, "kj1", "KJ1", kj1, ["none"] * 6)
    finite(cls, "kj2", "KJ2", pret, ["none"] * 6)
    for i, s in enumerate(imp):
        slot(cls, "imp_sg" if i == 0 else f"imp_sg{i + 1}", "VER IMP SIN", s)
    slot(cls, "imp_pl", "VER IMP PLU", imp_pl)
    slot(cls, "part2", "VER PA2", part2, "none", "ge")
    slot(cls, "eiz", "VER EIZ", inf, "none", "zu")
    participles(cls)


weak("v_weak")
weak("v_weak_s", pres=("e", "t", "t", "en", "t", "en"))
weak("v_weak_t", pres=("e", "est", "et", "en", "et", "en"),
     pret=("ete", "etest", "ete", "eten", "etet", "eten"), imp_pl="et", part2="et")
weak("v_weak_ern", inf="n", pres=("e", "st", "t", "n", "t", "n"), kj1=("e", "est", "e", "n", "et", "n"))


def strong(cls, pres=("e", "st", "t", "en", "t", "en"), pret=("", "st", "", "en", "t", "en"), imp_pl="t"):
    slot(cls, "inf", "VER INF", "en")
    finite(cls, "pres", "PRÄ", pres, ["none", "pres23_stem", "pres23_stem", "none", "none", "none"])
    finite(cls, "pret", "PRT", pret, ["pret_stem"] * 6)
    finite(cls, "kj1", "KJ1", ("e", "est", "e", "en", "et", "en"), ["none"] * 6)
    finite(cls, "kj2", "KJ2", ("e", "est", "e", "en", "et", "en"), ["pret_umlaut"] * 6)
    slot(cls, "imp_sg", "VER IMP SIN", "")
    slot(cls, "imp_sg2", "VER IMP SIN", "e")
    slot(cls, "imp_pl", "VER IMP PLU", imp_pl)
    slot(cls, "part2", "VER PA2", "en", "none", "ge")
    slot(cls, "eiz", "VER EIZ", "en", "none", "zu")
    participles(cls)


strong("v_strong")
strong("v_strong_t", pres=("e", "est", "et", "en", "et", "en"), pret=("", "est", "", "en", "et", "en"),
       imp_pl="et")

# Mixed verbs (bringen, denken): weak endings on a changed preterite stem.
cls = "v_mixed"
slot(cls, "inf", "VER INF", "en")
finite(cls, "pres", "PRÄ", ("e", "st", "t", "en", "t", "en"), ["none"] * 6)
finite(cls, "pret", "PRT", ("te", "test", "te", "ten", "tet", "ten"), ["pret_stem"] * 6)
finite(cls, "kj1", "KJ1", ("e", "est", "e", "en", "et", "en"), ["none"] * 6)
finite(cls, "kj2", "KJ2", ("te", "test", "te", "ten", "tet", "ten"), ["pret_umlaut"] * 6)
slot(cls, "imp_sg", "VER IMP SIN", "e")
slot(cls, "imp_sg2", "VER IMP SIN", "")
slot(cls, "imp_pl", "VER IMP PLU", "t")
slot(cls, "part2", "VER PA2", "t", "pret_stem", "ge")
slot(cls, "eiz", "VER EIZ", "en", "none", "zu")
participles(cls)


# Auxiliaries and modals: complete fixed paradigms.
def fixed_verb(cls, base, inf, pres, pret, kj1, kj2, imp_sg, imp_pl, part2):
    slot(cls, "inf", f"{base} INF", inf, "fixed")
    for tense, forms in (("PRÄ", pres), ("PRT", pret), ("KJ1", kj1), ("KJ2", kj2)):
        for (pe, nu), sid, form in zip(PERSONS, IDS, forms):
            slot(cls, f"{tense.lower().replace('ä', 'a')}_{sid}", f"{base} {pe} {nu} {tense}", form, "fixed")
    for i, f in enumerate(imp_sg):
        slot(cls, "imp_sg" if i == 0 else f"imp_sg{i + 1}", f"{base} IMP SIN", f, "fixed")
    for i, f in enumerate(imp_pl):
        slot(cls, "imp_pl" if i == 0 else f"imp_pl{i + 1}", f"{base} IMP PLU", f, "fixed")
    for i, f in enumerate(part2):
        slot(cls, "part2" if i == 0 else f"part2_{i + 1}", f"{base} PA2", f, "fixed")


fixed_verb("aux_sein", "VER AUX", "sein", "bin bist ist sind seid sind".split(),
           "war warst war waren wart waren".split(), "sei seiest sei seien seiet seien".split(),
           "wäre wärest wäre wären wäret wären".split(), ["sei"], ["seid"], ["gewesen"])
fixed_verb("aux_haben", "VER AUX", "haben", "habe hast hat haben habt haben".split(),
           "hatte hattest hatte hatten hattet hatten".split(), "habe habest habe haben habet haben".split(),
           "hätte hättest hätte hätten hättet hätten".split(), ["hab", "habe"], ["habt"], ["gehabt"])
fixed_verb("aux_werden", "VER AUX", "werden", "werde wirst wird werden werdet werden".split(),
           "wurde wurdest wurde wurden wurdet wurden".split(), "werde werdest werde werden werdet werden".split(),
           "würde würdest würde würden würdet würden".split(), ["werde"], ["werdet"], ["geworden", "worden"])
MODALS = {
    "mod_koennen": ("können", "kann kannst kann können könnt können", "konnt", "könn", "könnt", "gekonnt"),
    "mod_wollen": ("wollen", "will willst will wollen wollt wollen", "wollt", "woll", "wollt", "gewollt"),
    "mod_muessen": ("müssen", "muß mußt muß müssen müßt müssen", "mußt", "müss", "müßt", "gemußt"),
    "mod_duerfen": ("dürfen", "darf darfst darf dürfen dürft dürfen", "durft", "dürf", "dürft", "gedurft"),
    "mod_sollen": ("sollen", "soll sollst soll sollen sollt sollen", "sollt", "soll", "sollt", "gesollt"),
    "mod_moegen": ("mögen", "mag magst mag mögen mögt mögen", "mocht", "mög", "möcht", "gemocht"),
}
for cls, (inf, pres, pret, kj1, kj2, part2) in MODALS.items():
    pe = ["e", "est", "e", "en", "et", "en"]
    fixed_verb(cls, "VER MOD", inf, pres.split(), [pret + s for s in pe], [kj1 + s for s in pe],
               [kj2 + s for s in pe], [kj1 + "e"], [], [part2])

# ------------------------------------------------------ closed classes
slot("uninfl", "base", "@P", "")
for c in ("GEN", "DAT", "AKK"):
    slot(f"prp_{c.lower()}", "base", f"@P {c}", "")
slot("prp_dat_akk", "dat", "@P DAT", "")
slot("prp_dat_akk", "akk", "@P AKK", "")

ART_DEF = [
    ("der", ["NOM MAS SIN", "GEN FEM SIN", "DAT FEM SIN", "GEN PLU"]),
    ("die", ["NOM FEM SIN", "AKK FEM SIN", "NOM PLU", "AKK PLU"]),
    ("das", ["NOM NEU SIN", "AKK NEU SIN"]),
    ("des", ["GEN MAS SIN", "GEN NEU SIN"]),
    ("dem", ["DAT MAS SIN", "DAT NEU SIN"]),
    ("den", ["AKK MAS SIN", "DAT PLU"]),
]
for form, feats in ART_DEF:
    for f in feats:
        slot("art_def", f"{form}_{f.replace(' ', '_').lower()}", f"ART DEF {f}", form, "fixed")

# Demonstrative and relative "der": pronominal forms, plus attributive
# demonstrative readings that share the article forms.
DER_PRO = [
    ("der", ["NOM MAS SIN", "DAT FEM SIN"]),
    ("die", ["NOM FEM SIN", "AKK FEM SIN", "NOM PLU", "AKK PLU"]),
    ("das", ["NOM NEU SIN", "AKK NEU SIN"]),
    ("dessen", ["GEN MAS SIN", "GEN NEU SIN"]),
    ("deren", ["GEN FEM SIN", "GEN PLU"]),
    ("dem", ["DAT MAS SIN", "DAT NEU SIN"]),
    ("den", ["AKK MAS SIN"]),
    ("denen", ["DAT PLU"]),
]
for form, feats in DER_PRO:
    for f in feats:
        slot("dem_der", f"pro_{form}_{f.replace(' ', '_').lower()}", f"PRO DEM {f} PRO", form, "fixed")
        slot("rel_der", f"pro_{form}_{f.replace(' ', '_').lower()}", f"PRO REL {f} PRO", form, "fixed")
for form, feats in ART_DEF:
    for f in feats:
        slot("dem_der", f"att_{form}_{f.replace(' ', '_').lower()}", f"PRO DEM {f} ATT", form, "fixed")

DER_WORD = [
    ("er", ["NOM MAS SIN", "GEN FEM SIN", "DAT FEM SIN", "GEN PLU"]),
    ("e", ["NOM FEM SIN", "AKK FEM SIN", "NOM PLU", "AKK PLU"]),
    ("es", ["NOM NEU SIN", "AKK NEU SIN", "GEN MAS SIN", "GEN NEU SIN"]),
    ("em", ["DAT MAS SIN", "DAT NEU SIN"]),
    ("en", ["AKK MAS SIN", "DAT PLU"]),
]
for usage in ("ATT", "PRO"):
    for ending, feats in DER_WORD:
        for f in feats:
            slot("derwort", f"{usage.lower()}_{ending}_{f.replace(' ', '_').lower()}", f"@P {f} {usage}", ending)

EIN_ATT = [
    ("", ["NOM MAS SIN", "NOM NEU SIN", "AKK NEU SIN"]),
    ("es", ["GEN MAS SIN", "GEN NEU SIN"]),
    ("em", ["DAT MAS SIN", "DAT NEU SIN"]),
    ("en", ["AKK MAS SIN", "DAT PLU"]),
    ("e", ["NOM FEM SIN", "AKK FEM SIN", "NOM PLU", "AKK PLU"]),
    ("er", ["GEN FEM SIN", "DAT FEM SIN", "GEN PLU"]),
]
EIN_PRO = [
    ("er", ["NOM MAS SIN", "GEN FEM SIN", "DAT FEM SIN", "GEN PLU"]),
    ("es", ["NOM NEU SIN", "AKK NEU SIN", "GEN MAS SIN", "GEN NEU SIN"]),
    ("s", ["NOM NEU SIN", "AKK NEU SIN"]),
    ("em", ["DAT MAS SIN", "DAT NEU SIN"]),
    ("en", ["AKK MAS SIN", "DAT PLU"]),
    ("e", ["NOM FEM SIN", "AKK FEM SIN", "NOM PLU", "AKK PLU"]),
]
for ending, feats in EIN_ATT:
    for f in feats:
        slot("einwort", f"att_{ending or '0'}_{f.replace(' ', '_').lower()}", f"@P {f} ATT", ending)
for ending, feats in EIN_PRO:
    for f in feats:
        slot("einwort", f"pro_{ending}_{f.replace(' ', '_').lower()}", f"@P {f} PRO", ending)
for ending, feats in EIN_ATT:
    for f in feats:
        if "PLU" in f:
            continue
        slot("art_ind", f"{ending or '0'}_{f.replace(' ', '_').lower()}", f"ART IND {f}", ending)


def fixed_rows(cls, tag_forms):
    for i, (tag, form) in enumerate(tag_forms):
        slot(cls, f"f{i}", tag, form, "fixed")


def personal(cls, person, number, forms, gender=None):
    g = f" {gender}" if gender else ""
    fixed_rows(cls, [(f"PRO PER {person} {c}{g} {number}", f) for c, f in zip(CASES, forms)])


personal("per_ich", "1PE", "SIN", ["ich", "meiner", "mir", "mich"])
personal("per_du", "2PE", "SIN", ["du", "deiner", "dir", "dich"])
personal("per_er", "3PE", "SIN", ["er", "seiner", "ihm", "ihn"], "MAS")
personal("per_es", "3PE", "SIN", ["es", "seiner", "ihm", "es"], "NEU")
personal("per_wir", "1PE", "PLU", ["wir", "unser", "uns", "uns"])
personal("per_ihr", "2PE", "PLU", ["ihr", "euer", "euch", "euch"])
personal("per_Sie", "3PE", "PLU", ["Sie", "Ihrer", "Ihnen", "Sie"])
fixed_rows("per_sie", [(f"PRO PER 3PE {c} FEM SIN", f) for c, f in zip(CASES, ["sie", "ihrer", "ihr", "sie"])] +
           [(f"PRO PER 3PE {c} PLU", f) for c, f in zip(CASES, ["sie", "ihrer", "ihnen", "sie"])])
fixed_rows("ref_sich", [(f"PRO REF 3PE {c} {n}", "sich") for c in ("DAT", "AKK") for n in ("SIN", "PLU")])
fixed_rows("ref_mich", [("PRO REF 1PE DAT SIN", "mir"), ("PRO REF 1PE AKK SIN", "mich")])
fixed_rows("ref_dich", [("PRO REF 2PE DAT SIN", "dir"), ("PRO REF 2PE AKK SIN", "dich")])
fixed_rows("ref_uns", [("PRO REF 1PE DAT PLU", "uns"), ("PRO REF 1PE AKK PLU", "uns")])
fixed_rows("ref_euch", [("PRO REF 2PE DAT PLU", "euch"), ("PRO REF 2PE AKK PLU", "euch")])
fixed_rows("inr_wer", [(f"PRO INR {c} MAS SIN PRO", f) for c, f in zip(CASES, ["wer", "wessen", "wem", "wen"])])
fixed_rows("inr_was", [("PRO INR NOM NEU SIN PRO", "was"), ("PRO INR AKK NEU SIN PRO", "was")])

out = os.path.join(os.path.dirname(__file__), "..", "..", "data", "paradigms.tsv")
with open(out, "w", encoding="utf-8") as fh:
    fh.write("# class_id\tslot_id\ttag template\tsuffix\tstem_transform\tmarker\n")
    for r in rows:
        fh.write("\t".join(r) + "\n")
print(f"{len(rows)} slots written to {os.path.normpath(out)}")
