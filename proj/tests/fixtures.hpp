#pragma once

#include "duval/json_io.hpp"
#include "duval/picard.hpp"

// Expected values frozen from the independent oracle in
// tests/oracles/expected_values.py (exact rational arithmetic in Python,
// no shared code with the library).

namespace fixtures {

inline const duval::PointConfig& paper_config() {
    static const duval::PointConfig cfg = duval::builtin_config();
    return cfg;
}

inline duval::EllipticCurve curve17() {
    return duval::EllipticCurve(duval::Rational(0), duval::Rational(17));
}

// p_1 + ... + p_9, equal to 13*p_1 - 2*p_3
inline const char* kSum9X = "1391670003455782296385185163/175703792270943478956597121";
inline const char* kSum9Y =
    "52797002876030909032108460368462958130222/2329011873814120683979055415255259023169";

// 13*p_1 - p_3 (differs from the sum of the nine points)
inline const char* kCombo13m1X =
    "-350583022573220379298694679116/345773557639866118563824143201";
inline const char* kCombo13m1Y =
    "812218105722608514110220919386655080785409639/203323542395531321385749774269545286039773"
    "551";

// -(p_1 + ... + p_8): the base point for g = 1 and the ninth point of the
// Halphen negative control
inline const char* kNegSum8X = "-843783054887790496097/362795392916365547889";
inline const char* kNegSum8Y = "-14526671323956147494526662927560/6910232265921596937605900551287";

// -(2(p_1+...+p_8) + p_9): the base point for g = 2
inline const char* kBaseG2X =
    "-166978191511439356196917238004076087051617862240694966845315670122092997910444132824703"
    "182591919/106650364651555531990913960911516569680228703280346607106882546551948760265183"
    "938778705910007684";
inline const char* kBaseG2Y =
    "1263590402223546283627853083861546696598190019654279366036429813715076696286930107807916"
    "83223613822402460974908438186578030091703605464050794503/3482920143430404317150890385025"
    "5889864405092415263067411940292826529782357583945066044123439452821363202299696683683323"
    "882985981976246658768248";

// -(3(p_1+...+p_8) + 2 p_9): the base point for g = 3
inline const char* kBaseG3X =
    "1287079986992801760220793757558549536724791268849562737941692607577053253433834251444783"
    "4992556152571376250920110667267567966121742463641837137466368883963601084676074754867438"
    "091734804812144894053072248131158822535020807199/967760276693370682396791161041124430000"
    "4475952916368295152013335119777731606335802130380780261022805679791635526151379967218458"
    "7701968463624236717577811785820257662713482094875505571905713478685531093213733848799243"
    "63440481";
inline const char* kBaseG3Y =
    "1324400174470057029537620673500435788790457962317817033242439305402944108278090412543122"
    "4764516328698628464184363517480820934854499788989752063313585104984853286258379993405657"
    "3477640860530547950836878124190599300958842957120637926225727293675547388832886471397962"
    "550812180669134157431583912365451943258277083836239405175859647214883636/301059050585785"
    "3417303591428271118944659965065221571222922740091421418891939423758903087048453271453753"
    "4610113443104638977446846282332626192503771443563330073117284905097631463479146401807660"
    "0815515494029485707725468443216457292559099119831102089131340842541135550186703451390347"
    "55426827629387449321962598472789283381268998358473504879";

}  // namespace fixtures
