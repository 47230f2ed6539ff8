"""High-precision oracle for the frozen expected values used in the C++ tests.

Evaluates every closed form directly with mpmath at 40 significant digits,
independent of the C++ implementation. Run: python3 tests/oracle/golden.py
"""
from mpmath import mp, mpf, pi, cos, sin, asin, findroot, floor

mp.dps = 40
RAD = pi / 180


def c(d):
    return cos(mpf(d) * RAD)


def omega(a, b):
    return (c(a) - c(b)) / (RAD * (mpf(b) - a))


def apex_distance(p, q):
    return (mpf(q) - p) * c(p) / (c(p) - c(q))


def z_midpoint(a, b):
    w = omega(a, b)
    return ((c(a) + c((mpf(a) + b) / 2)) / (RAD * w) - 180 + mpf(3) / 2 * a + mpf(b) / 2) / 2


def refined(a, b):
    w = omega(a, b)
    xs = asin(w) / RAD
    return xs, ((c(a) + c(xs)) / (RAD * w) - 180 + a + xs) / 2


def e(x, w, z):
    return RAD * w * (90 - mpf(x) + z) - c(x)


def dms(deg):
    s = deg * 3600
    whole = int(floor(s + mpf("0.5")))
    return whole // 3600, (whole % 3600) // 60, whole % 60


show = lambda k, v: print(f"{k:40s} {mp.nstr(v, 17)}")

show("apex_distance(40,70)", apex_distance(40, 70))
show("omega(40,70)", omega(40, 70))
show("omega(50,60)", omega(50, 60))
show("z_parallels(40,70)", apex_distance(40, 70) - 50)
show("z_mid(0,90)", z_midpoint(0, 90))
show("z_mid(50,60)", z_midpoint(50, 60))
show("z_mid(40,70)", z_midpoint(40, 70))
for ab in [(40, 70), (0, 90)]:
    xs, z = refined(*ab)
    show(f"x_star{ab}", xs)
    show(f"z_refined{ab}", z)
show("residual(0,90,30,60)", 90 * (c(30) - c(60)) - 30 * (c(0) - c(90)))
show("residual(40,70,50,60)", 30 * (c(50) - c(60)) - 10 * (c(40) - c(70)))
print("dms(0.818114)", dms(mpf("0.818114")))
w = omega(40, 70)
xs, zr = refined(40, 70)
show("h(40) bounds refined", (RAD * w * (90 - 40 + zr)) / c(40))
show("h(40) w=0.8098270 z=5", (RAD * mpf("0.8098270") * 55) / c(40))
show("e(40) w=0.8098270 z=5", e(40, mpf("0.8098270"), 5))
show("e(70) w=0.8098270 z=5 *15", 15 * e(70, mpf("0.8098270"), 5))
show("e(a) refined(40,70)", e(40, w, zr))
f = lambda x: e(x, mpf("0.8098270"), 5)
show("root1 w=0.8098270 z=5", findroot(f, 45))
show("root2 w=0.8098270 z=5", findroot(f, 64))
show("55*alpha*0.8098270", 55 * RAD * mpf("0.8098270"))
# inverse of the forward example: a point at lat 40 on the lon = 1 meridian
th = RAD * mpf("0.8098270")
show("fwd(40,1) x", 55 * mp.sin(th))
show("fwd(40,1) y", -55 * mp.cos(th))
