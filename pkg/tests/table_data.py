"""Expected values of the three-column triangle center table.

Radii are compared as squares in k; a label maps to (x, y) coordinate text.
"""
COLUMNS = [
    {
        "field": "Q",
        "vertices": "(0,0);(30,16);(15,36)",
        "G": ("15", "52/3"),
        "L": ("31485/1651", "32976/1651"),
        "E": ("72/7", "943/56"),
        "H": ("171/7", "513/28"),
        "I": ("120/7", "132/7"),
        "I_A": ("35", "77/2"),
        "I_B": ("-33", "30"),
        "I_C": ("22", "-20"),
        "Ge": ("96/5", "96/5"),
        "Na": ("75/7", "100/7"),
        "r": "60/7",
        "r_A": "35/2",
        "r_B": "42",
        "r_C": "28",
        "d": "1",
        "Delta": "420",
        "sides0": ("25", "39", "34"),
    },
    {
        "field": "Q",
        "vertices": "(0,0);(17,7);(3,21)",
        "G": ("20/3", "28/3"),
        "L": ("2166/295", "2562/295"),
        "E": ("47/8", "79/8"),
        "H": ("33/4", "33/4"),
        "I": ("7", "9"),
        "I_A": ("21", "27"),
        "I_B": ("-18", "14"),
        "I_C": ("27/2", "-21/2"),
        "Ge": ("539/73", "637/73"),
        "Na": ("6", "10"),
        "r": "4*sqrt(2)",
        "r_A": "12*sqrt(2)",
        "r_B": "14*sqrt(2)",
        "r_C": "21/2*sqrt(2)",
        "d": "2",
        "Delta": "168",
        "sides0": ("14", "15", "13"),
    },
    {
        "field": "Q(sqrt 2)",
        "vertices": "(0,0);(57,3*sqrt(2));(50,10*sqrt(2))",
        "G": ("107/3", "13/3*sqrt(2)"),
        "L": ("52875/1019", "6795/1019*sqrt(2)"),
        "E": ("117/4", "-45/8*sqrt(2)"),
        "H": ("97/2", "97/4*sqrt(2)"),
        "I": ("48", "6*sqrt(2)"),
        "I_A": ("60", "15/2*sqrt(2)"),
        "I_B": ("-6", "24*sqrt(2)"),
        "I_C": ("15", "-60*sqrt(2)"),
        "Ge": ("5096/103", "784/103*sqrt(2)"),
        "Na": ("11", "sqrt(2)"),
        "r": "2*sqrt(6)",
        "r_A": "5/2*sqrt(6)",
        "r_B": "14*sqrt(6)",
        "r_C": "35*sqrt(6)",
        "d": "3",
        "Delta": "210*sqrt(2)",
        # the reference data lists b = 33 sqrt 3, c = 30 sqrt 3; |CA|^2 = 2700 and
        # |AB|^2 = 3267 give the reverse, which its r_B = 14 sqrt 6 also requires
        "sides0": ("7", "30", "33"),
    },
]

POINTS = ("G", "L", "E", "H", "I", "I_A", "I_B", "I_C", "Ge", "Na")
RADII = ("r", "r_A", "r_B", "r_C")


def radius_square(text: str):
    """Square of c*sqrt(t) (or of a rational) as a Fraction."""
    from fractions import Fraction
    import re

    mt = re.fullmatch(r"(?:(-?\d+(?:/\d+)?)\*?)?sqrt\((\d+)\)", text)
    if mt:
        c = Fraction(mt.group(1) or 1)
        return c * c * int(mt.group(2))
    return Fraction(text) ** 2
