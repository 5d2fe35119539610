"""Generated complexity oracle corpus."""


def f00(a):
    v1 = sum(k for k in range(a) if k % 2)
    return a


def f01(a):
    assert a > 4 and a > 7 or a > 7
    try:
        try:
            v5 = a > 0 or a
            v6 = 1 if a > 3 or a > 0 or a > 1 else 2
        except KeyError:
            v7 = a + 1
            v8 = 1 if a > 2 else 2
        else:
            v9 = a + 1
        try:
            v11 = a + 1
            v12 = a > 5 or a
            v13 = a + 1
        except ValueError:
            v14 = a > 8 and a > 4 or a
            v15 = a > 8 or a
        else:
            v16 = a + 1
        finally:
            pass
        v17 = a + 1
    except ValueError:
        def v18(b):
            return b if a > 0 else 0
        v19 = lambda q: q if a > 4 else -q
    except KeyError:
        try:
            v21 = a > 1 and a > 6 and a > 4 or a
            v22 = a > 2 or a
        except TypeError:
            v23 = a + 1
        except ValueError:
            v24 = a + 1
            v25 = a > 1 or a
        except KeyError:
            v26 = 1 if a > 9 or a > 7 else 2
            v27 = a > 4 or a
            v28 = a + 1
        else:
            assert a > 3 or a > 9
            v30 = a > 4 or a > 3 and a > 5 or a
            assert a > 1
        finally:
            pass
        if a > 4 and a > 8:
            v33 = 1 if a > 5 else 2
            v34 = a > 1 or a
            v35 = 1 if a > 8 else 2
        elif a > 6 and a > 0 and a > 1:
            assert a > 7
            v37 = a + 1
        else:
            v38 = a > 0 or a > 2 or a
    finally:
        pass
    for v39 in range(a):
        match a:
            case 0:
                v41 = a + 1
                v42 = 1 if a > 8 or a > 6 or a > 8 else 2
                v43 = 1 if a > 4 and a > 5 else 2
            case 1:
                v44 = a > 3 or a > 3 or a > 2 or a
                v45 = a + 1
                v46 = 1 if a > 0 and a > 2 else 2
            case 2:
                assert a > 9 or a > 0
                v48 = a + 1
        v49 = [x0 for x0 in range(a) for x1 in range(a) if x0 > 1]
        for v50 in range(a):
            assert a > 9
            assert a > 8
        else:
            v53 = a + 1
            assert a > 8 or a > 5 or a > 5
            v55 = a > 8 or a
    else:
        v56 = {k: k for k in range(a) if k and a > 9}
    return a


def f02(a):
    v57 = {k: k for k in range(a) if k and a > 8}
    v58 = sum(k for k in range(a) if k % 2)
    return a


def f03(a):
    def v59(b):
        return b if a > 8 else 0
    return a


def f04(a):
    try:
        if a > 7:
            v62 = 1 if a > 3 or a > 1 else 2
            v63 = a > 9 and a > 8 or a
            v64 = 1 if a > 5 or a > 1 and a > 4 else 2
        v65 = 1 if a > 3 else 2
    except TypeError:
        v66 = {k: k for k in range(a) if k and a > 1 or a > 8 or a > 1}
        v67 = lambda q: q if a > 9 else -q
        v68 = a + 1
    except KeyError:
        v69 = [x0 for x0 in range(a) for x1 in range(a) ]
        assert a > 0
        if a > 0:
            assert a > 3 and a > 2
        elif a > 7:
            v73 = a + 1
            v74 = 1 if a > 5 else 2
            v75 = 1 if a > 1 else 2
        elif a > 2:
            v76 = 1 if a > 1 else 2
            v77 = 1 if a > 9 else 2
            v78 = a + 1
    else:
        v79 = 1 if a > 1 or a > 3 and a > 1 else 2
        v80 = a > 1 or a
        v81 = 1 if a > 3 or a > 6 else 2
    finally:
        pass
    v82 = a + 1
    return a


def f05(a):
    v83 = a > 2 or a
    try:
        try:
            v86 = a > 1 or a > 1 or a
            v87 = 1 if a > 3 else 2
        except TypeError:
            assert a > 1 and a > 1 or a > 8
            v89 = a + 1
            v90 = a > 2 and a > 9 or a
        except ValueError:
            assert a > 5
            v92 = a + 1
        finally:
            pass
    except KeyError:
        v93 = lambda q: q if a > 8 else -q
        match a:
            case 0:
                assert a > 7 or a > 2 or a > 7
                v96 = a + 1
                v97 = 1 if a > 7 or a > 6 else 2
            case 1:
                v98 = 1 if a > 3 else 2
                v99 = 1 if a > 3 else 2
                assert a > 2
            case 2:
                v101 = 1 if a > 9 else 2
                v102 = a + 1
                v103 = a > 8 or a > 3 or a
            case _:
                pass
    except TypeError:
        assert a > 2 or a > 5 or a > 3
    finally:
        pass
    return a


def f06(a):
    for v105 in range(a):
        v106 = 1 if a > 8 else 2
    return a


def f07(a):
    def v107(b):
        return b if a > 3 or a > 5 or a > 7 else 0
    try:
        for v109 in range(a):
            v110 = 1 if a > 7 or a > 5 else 2
            v111 = a + 1
            assert a > 5
        else:
            v113 = a + 1
            v114 = a + 1
            v115 = a + 1
        try:
            v117 = a + 1
            assert a > 9
            v119 = a > 5 or a > 0 or a
        except TypeError:
            v120 = a + 1
            v121 = a > 1 or a
        else:
            v122 = a + 1
        try:
            v124 = 1 if a > 6 or a > 8 else 2
        except ValueError:
            v125 = 1 if a > 5 or a > 7 or a > 4 else 2
        finally:
            pass
    except TypeError:
        v126 = [k async for k in a]
        for v127 in range(a):
            v128 = a > 3 and a > 3 and a > 9 or a
            v129 = a + 1
        else:
            v130 = a > 6 or a > 3 or a
            assert a > 7 or a > 2 and a > 8
            assert a > 2 and a > 7
        for v133 in range(a):
            v134 = a + 1
            v135 = a + 1
        else:
            assert a > 9
            v137 = a + 1
            assert a > 7
    except KeyError:
        while a > 1:
            a -= 1
            v140 = a + 1
            assert a > 1 and a > 3
        else:
            v142 = 1 if a > 6 or a > 9 else 2
            v143 = a > 2 or a
        v144 = lambda q: q if a > 6 or a > 9 and a > 1 else -q
        if a > 1:
            v146 = a > 6 or a > 6 or a > 4 or a
    if a > 8 or a > 4:
        with open('f') as fh:
            v149 = a + 1
        try:
            assert a > 1
        except KeyError:
            assert a > 4
        except TypeError:
            assert a > 0
            v154 = a + 1
            v155 = 1 if a > 9 else 2
        else:
            assert a > 9
            v157 = a > 0 or a > 7 or a
        v158 = a > 7 and a > 7 or a
    return a


def f08(a):
    for v159 in range(a):
        def v160(b):
            return b if a > 6 else 0
        for v161 in range(a):
            v162 = a > 1 or a
            v163 = a + 1
            v164 = 1 if a > 7 else 2
        def v165(b):
            return b if a > 0 or a > 5 or a > 3 else 0
    return a


async def f09(a):
    while a > 7 and a > 7 and a > 3:
        a -= 1
        v167 = {k: k for k in range(a) if k and a > 6}
    return a


def f10(a):
    v168 = [x0 for x0 in range(a) if x0 > 1 if x0 > 1]
    try:
        if a > 2 or a > 5 or a > 5:
            v171 = a + 1
        elif a > 9:
            v172 = a > 3 or a
            v173 = 1 if a > 0 else 2
        v174 = 1 if a > 9 and a > 5 or a > 7 else 2
        match a:
            case 0:
                assert a > 1
            case 1:
                assert a > 6 and a > 8
                assert a > 6 or a > 0 or a > 2
                v179 = 1 if a > 5 else 2
            case 2:
                v180 = a + 1
                v181 = a + 1
                v182 = a > 8 or a
            case _:
                pass
    except TypeError:
        try:
            v184 = a > 4 and a > 8 or a
            v185 = 1 if a > 1 else 2
            v186 = a + 1
        except TypeError:
            v187 = 1 if a > 7 else 2
            v188 = 1 if a > 2 or a > 9 else 2
        except KeyError:
            assert a > 6
            v190 = a > 8 or a
        except ValueError:
            assert a > 6 or a > 4
            assert a > 5 or a > 3
            v193 = a + 1
        finally:
            pass
        assert a > 1 and a > 8
    except ValueError:
        while a > 0:
            a -= 1
            assert a > 6
            v197 = 1 if a > 0 else 2
            v198 = 1 if a > 0 and a > 9 and a > 7 else 2
        def v199(b):
            return b if a > 9 else 0
        if a > 3 and a > 0 or a > 3:
            v201 = 1 if a > 0 or a > 5 else 2
            v202 = a > 0 or a
    except KeyError:
        def v203(b):
            return b if a > 9 and a > 1 else 0
        try:
            v205 = a + 1
            v206 = a > 4 or a
        except TypeError:
            v207 = a + 1
            v208 = a > 5 or a
        except KeyError:
            v209 = a + 1
            v210 = a + 1
        finally:
            pass
    finally:
        pass
    while a > 0 and a > 0 or a > 4:
        a -= 1
        try:
            v213 = a > 7 and a > 5 or a
            v214 = 1 if a > 4 and a > 2 and a > 2 else 2
            v215 = a + 1
        except ValueError:
            v216 = 1 if a > 8 else 2
            v217 = a > 7 or a
        except TypeError:
            v218 = a + 1
        except KeyError:
            v219 = a + 1
        finally:
            pass
    else:
        if a > 9:
            v221 = 1 if a > 2 and a > 5 else 2
            assert a > 7
        elif a > 5 or a > 2:
            v223 = a + 1
            v224 = a + 1
        elif a > 2:
            v225 = a > 0 or a > 2 and a > 7 or a
            v226 = a > 8 or a
            v227 = 1 if a > 3 else 2
        elif a > 5 and a > 9 or a > 1:
            v228 = a > 1 or a > 1 and a > 8 or a
        else:
            assert a > 0 or a > 7 or a > 3
            v230 = a + 1
            assert a > 6 and a > 6 and a > 1
        while a > 2:
            a -= 1
            v233 = a > 9 or a > 0 or a
            v234 = 1 if a > 9 or a > 2 and a > 4 else 2
        else:
            v235 = a > 2 or a
    return a


def f11(a):
    try:
        if a > 1:
            v238 = a > 5 or a
        v239 = 1 if a > 0 else 2
        v240 = a > 8 or a
    except ValueError:
        v241 = [x0 for x0 in range(a) for x1 in range(a) if x0 > 1]
    else:
        try:
            v243 = a + 1
            v244 = a > 9 and a > 6 or a
        except TypeError:
            v245 = a + 1
            v246 = a > 6 or a > 1 or a
            v247 = a + 1
        try:
            v249 = a > 9 and a > 6 or a > 8 or a
            v250 = 1 if a > 1 or a > 6 else 2
        except KeyError:
            v251 = a > 1 and a > 2 or a > 7 or a
            assert a > 7 or a > 2
            v253 = 1 if a > 1 else 2
    finally:
        pass
    return a


def f12(a):
    with open('f') as fh:
        for v255 in range(a):
            v256 = 1 if a > 5 or a > 8 and a > 8 else 2
        else:
            v257 = a > 6 and a > 6 and a > 3 or a
            v258 = 1 if a > 0 or a > 1 and a > 3 else 2
            v259 = a + 1
        for v260 in range(a):
            v261 = a > 5 and a > 3 or a > 6 or a
            assert a > 4
            assert a > 1
        match a:
            case 0:
                v265 = 1 if a > 1 else 2
                v266 = a + 1
                v267 = a + 1
            case 1:
                v268 = a + 1
                assert a > 5
                v270 = 1 if a > 3 and a > 1 or a > 0 else 2
    v271 = 1 if a > 7 or a > 2 else 2
    return a


def f13(a):
    v272 = {k: k for k in range(a) if k and a > 9 or a > 0 and a > 2}
    try:
        v274 = [k async for k in a]
        assert a > 8 and a > 0
        v276 = sum(k for k in range(a) if k % 2)
    except TypeError:
        for v277 in range(a):
            v278 = a + 1
        else:
            v279 = a > 3 or a > 7 or a
            v280 = a > 4 and a > 9 or a
            v281 = 1 if a > 8 else 2
    return a


def f14(a):
    v282 = a + 1
    return a


def f15(a):
    def v283(b):
        return b if a > 1 else 0
    return a


def f16(a):
    v284 = lambda q: q if a > 5 else -q
    return a


def f17(a):
    assert a > 1
    return a


def f18(a):
    with open('f') as fh:
        for v287 in range(a):
            v288 = 1 if a > 9 or a > 7 or a > 3 else 2
            v289 = 1 if a > 3 else 2
        else:
            v290 = a > 4 and a > 0 or a > 0 or a
            v291 = a > 6 or a > 8 and a > 9 or a
            v292 = 1 if a > 0 and a > 2 else 2
        while a > 7:
            a -= 1
            assert a > 0
            v295 = 1 if a > 7 else 2
        v296 = [k async for k in a]
    assert a > 8 or a > 8 or a > 3
    try:
        v299 = 1 if a > 9 or a > 9 else 2
    except TypeError:
        assert a > 2 or a > 3 and a > 6
        v301 = [x0 for x0 in range(a) if x0 > 1 if x0 > 1]
        v302 = sum(k for k in range(a) if k % 2)
    except KeyError:
        if a > 5:
            v304 = a > 4 or a
            v305 = 1 if a > 3 or a > 2 and a > 6 else 2
            v306 = 1 if a > 8 and a > 2 or a > 5 else 2
        elif a > 2 or a > 5 or a > 0:
            v307 = a + 1
            assert a > 6 or a > 6
        v309 = [k async for k in a]
        v310 = {k: k for k in range(a) if k and a > 0}
    except ValueError:
        try:
            v312 = a + 1
            assert a > 5
        except ValueError:
            v314 = 1 if a > 3 else 2
            v315 = a + 1
        except KeyError:
            v316 = a + 1
            assert a > 5
        except TypeError:
            v318 = a > 8 or a
        else:
            v319 = 1 if a > 1 and a > 0 else 2
        if a > 8 and a > 7:
            v321 = 1 if a > 2 else 2
            v322 = a + 1
        elif a > 8:
            v323 = 1 if a > 9 else 2
        elif a > 9:
            assert a > 7 and a > 3 and a > 9
        else:
            v325 = a + 1
        v326 = {k: k for k in range(a) if k and a > 8}
    else:
        for v327 in range(a):
            assert a > 7 and a > 6 and a > 7
        while a > 9:
            a -= 1
            v330 = a > 7 or a
            v331 = a + 1
        else:
            v332 = a > 9 or a
        v333 = [k async for k in a]
    finally:
        pass
    return a


async def f19(a):
    v334 = [k async for k in a]
    if a > 5:
        with open('f') as fh:
            v337 = a > 5 or a
        v338 = a + 1
        if a > 0 and a > 5:
            v340 = 1 if a > 5 and a > 2 else 2
            v341 = a > 3 or a
    return a


def f20(a):
    v342 = [x0 for x0 in range(a) for x1 in range(a) ]
    return a


def f21(a):
    v343 = 1 if a > 5 else 2
    assert a > 3
    return a


def f22(a):
    def v345(b):
        return b if a > 1 and a > 6 else 0
    v346 = [k async for k in a]
    return a


def f23(a):
    try:
        v348 = 1 if a > 0 else 2
        try:
            assert a > 1
            v351 = a + 1
        except KeyError:
            v352 = 1 if a > 9 and a > 8 else 2
            v353 = a + 1
        except TypeError:
            v354 = a + 1
            v355 = a > 6 or a
        else:
            v356 = a + 1
            v357 = a > 8 and a > 7 or a
        finally:
            pass
    except KeyError:
        try:
            v359 = a > 2 or a > 7 or a
            v360 = a + 1
        except ValueError:
            v361 = a > 6 or a > 5 or a > 2 or a
        finally:
            pass
        v362 = [k async for k in a]
        if a > 6:
            v364 = 1 if a > 1 else 2
        elif a > 1 and a > 1 or a > 5:
            v365 = 1 if a > 3 or a > 1 else 2
            v366 = a > 9 or a
        elif a > 4:
            v367 = a > 3 or a
    except ValueError:
        if a > 7:
            v369 = a + 1
            v370 = 1 if a > 7 else 2
        elif a > 7 and a > 8:
            assert a > 8 or a > 2
            v372 = a > 4 or a
        elif a > 7 and a > 8 or a > 5:
            v373 = a + 1
        elif a > 9:
            v374 = 1 if a > 6 or a > 8 else 2
        try:
            v376 = a + 1
            v377 = a + 1
        except ValueError:
            v378 = 1 if a > 8 else 2
            v379 = a > 1 or a
            v380 = a + 1
        finally:
            pass
        v381 = 1 if a > 4 else 2
    except TypeError:
        try:
            v383 = a > 4 or a > 0 or a
            assert a > 6 and a > 0
        except TypeError:
            v385 = 1 if a > 5 or a > 9 else 2
        except KeyError:
            v386 = 1 if a > 7 or a > 7 or a > 3 else 2
            v387 = 1 if a > 9 and a > 4 and a > 6 else 2
            v388 = a > 0 and a > 7 and a > 1 or a
        else:
            assert a > 1 or a > 8 or a > 4
            v390 = a > 7 or a > 2 or a
        finally:
            pass
    else:
        with open('f') as fh:
            v392 = a > 4 or a > 2 and a > 9 or a
            assert a > 3
        v394 = [k async for k in a]
    try:
        v396 = [x0 for x0 in range(a) for x1 in range(a) ]
        def v397(b):
            return b if a > 6 else 0
    except KeyError:
        for v398 in range(a):
            v399 = a + 1
            v400 = 1 if a > 2 else 2
        v401 = a + 1
    except TypeError:
        assert a > 1 or a > 0 or a > 0
    except ValueError:
        v403 = sum(k for k in range(a) if k % 2)
        while a > 4:
            a -= 1
            assert a > 2
    v406 = 1 if a > 5 or a > 8 and a > 8 else 2
    return a


def f24(a):
    v407 = lambda q: q if a > 8 else -q
    return a


def f25(a):
    v408 = a > 9 or a > 2 and a > 0 or a
    return a


def f26(a):
    v409 = lambda q: q if a > 6 and a > 9 else -q
    if a > 3 or a > 5:
        v411 = a + 1
    assert a > 1
    return a


def f27(a):
    def v413(b):
        return b if a > 0 else 0
    return a


def f28(a):
    v414 = lambda q: q if a > 0 and a > 7 else -q
    v415 = a > 8 or a
    match a:
        case 0:
            assert a > 5 and a > 8 and a > 7
        case 1:
            assert a > 4 and a > 0 or a > 4
            v419 = a > 8 or a
        case 2:
            assert a > 3 or a > 1 or a > 0
            v421 = 1 if a > 9 else 2
            v422 = a > 8 or a
        case _:
            pass
    return a


async def f29(a):
    for v423 in range(a):
        v424 = a > 9 and a > 9 or a
    else:
        v425 = a > 0 or a > 1 or a > 4 or a
        v426 = [k async for k in a]
        v427 = sum(k for k in range(a) if k % 2)
    while a > 2 and a > 1:
        a -= 1
        v429 = a > 5 or a
        match a:
            case 0:
                v431 = a + 1
                v432 = a + 1
                v433 = 1 if a > 0 or a > 1 or a > 1 else 2
            case 1:
                v434 = 1 if a > 8 and a > 0 else 2
                v435 = 1 if a > 4 else 2
                v436 = a > 7 or a > 3 and a > 7 or a
            case _:
                pass
    else:
        for v437 in range(a):
            assert a > 9 and a > 1 and a > 4
            assert a > 2 and a > 4 and a > 3
            assert a > 0 or a > 0 or a > 5
    return a


def f30(a):
    for v441 in range(a):
        v442 = 1 if a > 3 else 2
        def v443(b):
            return b if a > 3 and a > 3 else 0
        for v444 in range(a):
            v445 = 1 if a > 5 else 2
            v446 = 1 if a > 9 and a > 7 and a > 2 else 2
        else:
            v447 = 1 if a > 8 and a > 2 and a > 8 else 2
            v448 = 1 if a > 2 and a > 6 else 2
            v449 = 1 if a > 8 or a > 0 and a > 6 else 2
    while a > 4 or a > 7 and a > 7:
        a -= 1
        while a > 0 or a > 0:
            a -= 1
            assert a > 0
            v453 = a > 8 or a > 9 or a
            v454 = 1 if a > 1 else 2
        assert a > 2 and a > 1
    v456 = [x0 for x0 in range(a) for x1 in range(a) if x0 > 1]
    return a


def f31(a):
    if a > 4 or a > 7 or a > 2:
        assert a > 6
        while a > 1 and a > 2 and a > 6:
            a -= 1
            v460 = 1 if a > 3 else 2
        else:
            assert a > 5
            v462 = a + 1
            v463 = a > 8 and a > 3 or a
        while a > 5 or a > 1:
            a -= 1
            assert a > 4 or a > 9 and a > 8
            v466 = a > 6 or a
            v467 = 1 if a > 2 and a > 2 else 2
        else:
            v468 = a + 1
            v469 = a > 4 and a > 9 or a > 5 or a
    def v470(b):
        return b if a > 9 else 0
    return a


def f32(a):
    v471 = a > 8 and a > 4 or a
    assert a > 3 and a > 3
    def v473(b):
        return b if a > 2 else 0
    return a


def f33(a):
    try:
        try:
            v476 = a > 1 or a
            v477 = 1 if a > 8 and a > 9 and a > 8 else 2
            v478 = a + 1
        except TypeError:
            v479 = a > 9 or a > 9 or a
            assert a > 1 or a > 4
            v481 = a + 1
        except KeyError:
            v482 = a + 1
            v483 = a > 4 and a > 1 or a
        except ValueError:
            v484 = 1 if a > 2 else 2
        else:
            v485 = 1 if a > 2 and a > 1 else 2
        finally:
            pass
        for v486 in range(a):
            assert a > 1
            v488 = a + 1
            assert a > 3 or a > 4 and a > 6
        while a > 8 or a > 2:
            a -= 1
            v491 = a > 5 or a
            v492 = a > 0 and a > 5 or a
            assert a > 4
        else:
            v494 = a > 6 or a > 1 and a > 2 or a
            v495 = a > 8 or a > 9 or a
            assert a > 4 or a > 2 or a > 1
    except ValueError:
        for v497 in range(a):
            v498 = a > 9 or a
            v499 = a + 1
            v500 = a > 4 or a
    except TypeError:
        with open('f') as fh:
            v502 = a > 0 and a > 4 or a
            v503 = a + 1
            v504 = a + 1
    else:
        v505 = 1 if a > 8 else 2
    return a


def f34(a):
    if a > 9 or a > 0 or a > 9:
        v507 = a > 9 or a > 0 and a > 8 or a
        for v508 in range(a):
            v509 = 1 if a > 9 else 2
        else:
            v510 = a + 1
            assert a > 6 or a > 2 or a > 9
            assert a > 2 or a > 6
    v513 = lambda q: q if a > 4 else -q
    return a


def f35(a):
    v514 = a > 0 or a
    with open('f') as fh:
        if a > 1:
            v517 = a + 1
        v518 = [k async for k in a]
        v519 = a + 1
    return a


def f36(a):
    while a > 2:
        a -= 1
        v521 = lambda q: q if a > 2 else -q
        try:
            v523 = a + 1
            v524 = a + 1
            v525 = a + 1
        except TypeError:
            v526 = a > 0 or a
            v527 = a > 9 and a > 8 or a
        except KeyError:
            v528 = 1 if a > 9 else 2
            v529 = a + 1
            assert a > 6
        except ValueError:
            assert a > 9 and a > 1 and a > 8
            v532 = a + 1
            v533 = a > 9 or a > 7 or a
        finally:
            pass
    v534 = [x0 for x0 in range(a) for x1 in range(a) if x0 > 1]
    try:
        v536 = a + 1
    except TypeError:
        try:
            v538 = a > 3 or a
            v539 = 1 if a > 3 else 2
            v540 = a + 1
        except TypeError:
            v541 = a + 1
        finally:
            pass
    except ValueError:
        v542 = sum(k for k in range(a) if k % 2)
    else:
        assert a > 5 or a > 4 and a > 6
        v544 = [k async for k in a]
    finally:
        pass
    return a


def f37(a):
    assert a > 1
    return a


def f38(a):
    v546 = {k: k for k in range(a) if k and a > 4}
    if a > 6:
        v548 = [k async for k in a]
        v549 = [x0 for x0 in range(a) for x1 in range(a) if x0 > 1]
        if a > 6 and a > 1:
            assert a > 3
            v552 = a + 1
            assert a > 8
        elif a > 8 and a > 8 or a > 6:
            assert a > 6
            v555 = a + 1
        elif a > 5 and a > 7:
            v556 = a > 2 or a
            assert a > 2 or a > 6
    elif a > 4 or a > 0 or a > 1:
        v558 = [x0 for x0 in range(a) for x1 in range(a) if x0 > 1 if x0 > 1]
        v559 = a + 1
    return a


async def f39(a):
    v560 = [x0 for x0 in range(a) if x0 > 1]
    v561 = {k: k for k in range(a) if k and a > 8}
    return a


def f40(a):
    try:
        v563 = a + 1
    except TypeError:
        for v564 in range(a):
            v565 = a > 2 or a > 4 or a
            v566 = a > 8 and a > 9 or a
            v567 = a + 1
        else:
            v568 = a + 1
            v569 = a + 1
            v570 = a > 8 or a
    except ValueError:
        v571 = {k: k for k in range(a) if k and a > 5}
        v572 = {k: k for k in range(a) if k and a > 0 and a > 4}
        assert a > 1 or a > 6 or a > 5
    except KeyError:
        with open('f') as fh:
            v575 = a + 1
            v576 = 1 if a > 2 else 2
            v577 = a + 1
    else:
        for v578 in range(a):
            assert a > 1 or a > 3 and a > 0
            v580 = a > 6 or a
        else:
            v581 = a > 1 or a
            v582 = a + 1
            v583 = a + 1
    while a > 2 or a > 1:
        a -= 1
        v585 = a + 1
        try:
            assert a > 4
            v588 = 1 if a > 5 or a > 9 else 2
            assert a > 5
        except KeyError:
            v590 = a + 1
        else:
            v591 = 1 if a > 6 and a > 7 or a > 2 else 2
        finally:
            pass
    else:
        if a > 2:
            v593 = 1 if a > 6 else 2
        elif a > 3 and a > 7 or a > 7:
            v594 = 1 if a > 9 or a > 7 or a > 2 else 2
            v595 = a > 6 or a
        else:
            v596 = a > 0 or a
            assert a > 7 or a > 4
    return a


def f41(a):
    match a:
        case 0:
            v599 = a + 1
            v600 = 1 if a > 0 else 2
        case 1:
            v601 = a + 1
            v602 = 1 if a > 0 else 2
        case 2:
            assert a > 6
            v604 = a + 1
            v605 = a > 7 and a > 2 and a > 7 or a
        case _:
            pass
    with open('f') as fh:
        v607 = a + 1
        v608 = [x0 for x0 in range(a) ]
        try:
            assert a > 1
            v611 = a > 8 or a > 8 or a > 1 or a
        except TypeError:
            v612 = a + 1
            assert a > 1
        finally:
            pass
    return a


def f42(a):
    assert a > 8
    with open('f') as fh:
        def v616(b):
            return b if a > 9 else 0
        with open('f') as fh:
            v618 = 1 if a > 5 else 2
            v619 = 1 if a > 7 or a > 9 and a > 7 else 2
            v620 = 1 if a > 6 else 2
        while a > 0:
            a -= 1
            v622 = a + 1
        else:
            v623 = 1 if a > 1 and a > 4 or a > 1 else 2
            assert a > 5
    return a


def f43(a):
    try:
        for v626 in range(a):
            v627 = a > 8 or a
            v628 = a > 5 or a
            assert a > 4
    except KeyError:
        while a > 4 and a > 6:
            a -= 1
            v631 = 1 if a > 9 and a > 8 or a > 0 else 2
            assert a > 9 or a > 7
        else:
            assert a > 4 or a > 4 and a > 4
            v634 = a + 1
        with open('f') as fh:
            v636 = 1 if a > 0 and a > 7 else 2
        def v637(b):
            return b if a > 5 or a > 7 or a > 1 else 0
    except TypeError:
        v638 = [x0 for x0 in range(a) for x1 in range(a) if x0 > 1]
        try:
            v640 = 1 if a > 1 else 2
            v641 = 1 if a > 9 and a > 1 else 2
        except KeyError:
            assert a > 5 or a > 2
            v643 = 1 if a > 7 else 2
        except TypeError:
            v644 = a + 1
            v645 = 1 if a > 6 else 2
        else:
            v646 = a + 1
            v647 = a + 1
    except ValueError:
        v648 = sum(k for k in range(a) if k % 2)
    else:
        while a > 8:
            a -= 1
            v650 = a + 1
            v651 = a + 1
            v652 = a + 1
        v653 = {k: k for k in range(a) if k and a > 7}
    finally:
        pass
    return a


def f44(a):
    while a > 3 and a > 4:
        a -= 1
        v655 = a + 1
        try:
            assert a > 1 or a > 4 or a > 6
        except KeyError:
            assert a > 9 or a > 5
            assert a > 2 or a > 1
            v660 = a > 0 or a
        else:
            v661 = 1 if a > 0 and a > 3 else 2
            v662 = 1 if a > 2 else 2
            assert a > 1 or a > 1 or a > 5
    else:
        v664 = sum(k for k in range(a) if k % 2)
    v665 = 1 if a > 1 else 2
    v666 = {k: k for k in range(a) if k and a > 4 and a > 7 and a > 5}
    return a


def f45(a):
    try:
        while a > 6:
            a -= 1
            v669 = 1 if a > 4 or a > 8 and a > 1 else 2
        else:
            v670 = 1 if a > 6 or a > 4 or a > 5 else 2
            v671 = a + 1
    except KeyError:
        v672 = sum(k for k in range(a) if k % 2)
    except TypeError:
        if a > 0:
            v674 = a > 2 or a
            v675 = a + 1
            assert a > 8 or a > 2
        elif a > 4 and a > 4 and a > 9:
            v677 = a > 4 or a
            v678 = 1 if a > 0 and a > 9 or a > 8 else 2
        elif a > 6:
            v679 = a + 1
            assert a > 4 or a > 7
        v681 = lambda q: q if a > 1 else -q
    except ValueError:
        v682 = a + 1
        def v683(b):
            return b if a > 7 and a > 0 else 0
    v684 = sum(k for k in range(a) if k % 2)
    return a


def f46(a):
    v685 = 1 if a > 0 and a > 1 and a > 3 else 2
    for v686 in range(a):
        if a > 6:
            v688 = a > 5 and a > 4 and a > 0 or a
            v689 = a + 1
            v690 = a + 1
        v691 = sum(k for k in range(a) if k % 2)
        while a > 1:
            a -= 1
            assert a > 5
    else:
        v694 = a + 1
    v695 = lambda q: q if a > 6 or a > 5 and a > 7 else -q
    return a


def f47(a):
    assert a > 7 and a > 9 and a > 5
    v697 = a > 0 or a
    return a


def f48(a):
    def v698(b):
        return b if a > 4 and a > 3 else 0
    v699 = {k: k for k in range(a) if k and a > 1 and a > 2 or a > 1}
    return a


async def f49(a):
    if a > 6:
        with open('f') as fh:
            assert a > 6 and a > 1
            v703 = a + 1
        match a:
            case 0:
                v705 = a + 1
                v706 = a > 6 or a
    elif a > 4:
        v707 = [x0 for x0 in range(a) ]
    elif a > 1 and a > 4 or a > 8:
        v708 = sum(k for k in range(a) if k % 2)
    return a
