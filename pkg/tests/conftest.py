from ldot.parser import parse


def ld(text: str):
    return parse(text, "ld")


def lam(text: str):
    return parse(text, "lam")


def lamd(text: str):
    return parse(text, "lamd")
