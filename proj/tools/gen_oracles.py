#!/usr/bin/env python3
# Copyright 2026 The unirel Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference values for the unit tests, computed at 50 digits with mpmath.

The C++ library is not consulted: matrix functions come from mpmath's own
Hermitian eigensolver. Run this script and paste its output into
tests/oracle_values.hpp when the fixtures change.
"""
import mpmath as mp

mp.mp.dps = 50

RHO = mp.matrix([[mp.mpf("0.7"), mp.mpc("0.2", "0.1")],
                 [mp.mpc("0.2", "-0.1"), mp.mpf("0.3")]])
SIGMA = mp.matrix([[mp.mpf("0.4"), mp.mpc("-0.05", "0.15")],
                   [mp.mpc("-0.05", "-0.15"), mp.mpf("0.6")]])


def fun(m, f):
    w, v = mp.eighe(m)
    d = mp.diag([f(x) for x in w])
    return v * d * v.transpose_conj()


def tr(m):
    return mp.re(sum(m[i, i] for i in range(m.rows)))


def overlap(r):
    return tr(fun(RHO, lambda x: x ** r) * fun(SIGMA, lambda x: x ** (1 - r)))


def unified(r, s):
    x = overlap(r)
    if s == 0:
        return -mp.log(x) / (1 - r)
    return -(x ** s - 1) / ((1 - r) * s)


def umegaki():
    return tr(RHO * (fun(RHO, mp.log) - fun(SIGMA, mp.log)))


def entropy(r, s):
    p = tr(fun(RHO, lambda x: x ** r))
    if s == 0:
        return mp.log(p) / (1 - r)
    return (p ** s - 1) / ((1 - r) * s)


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(value, 20)};")


emit("kOverlapR03", overlap(mp.mpf("0.3")))
emit("kOverlapR2", overlap(2))
emit("kUmegaki", umegaki())
emit("kGenR03Sm1", unified(mp.mpf("0.3"), -1))
emit("kGenR03S05", unified(mp.mpf("0.3"), mp.mpf("0.5")))
emit("kRenyiR06", unified(mp.mpf("0.6"), 0))
emit("kGenR2S05", unified(2, mp.mpf("0.5")))
emit("kVonNeumann", -tr(RHO * fun(RHO, mp.log)))
emit("kEntropyR3S2", entropy(3, 2))
emit("kSqrtEighthPlusSqrtThreeEighths", mp.sqrt(mp.mpf(1) / 8) + mp.sqrt(mp.mpf(3) / 8))
emit("kHalfLogFourThirds", mp.log(mp.mpf(4) / 3) / 2)
emit("kLog2", mp.log(2))
