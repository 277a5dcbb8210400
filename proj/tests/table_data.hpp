#pragma once

// Published values the suites compare against.

#include <cstdint>
#include <string_view>
#include <vector>

namespace palquot::testdata {

// Odd N <= 239 in base-2 palindromes. a == 0 marks an unrepresentable N,
// refuted by the prefix heuristic at depth k.
struct SmallTableRow {
  std::uint64_t n;
  std::uint64_t a;
  std::uint64_t b;
  std::uint64_t k;
};

inline const std::vector<SmallTableRow> kOddUpTo239 = {
    {1, 1, 1, 0},
    {3, 3, 1, 0},
    {5, 5, 1, 0},
    {7, 7, 1, 0},
    {9, 9, 1, 0},
    {11, 33, 3, 0},
    {13, 65, 5, 0},
    {15, 15, 1, 0},
    {17, 17, 1, 0},
    {19, 513, 27, 0},
    {21, 21, 1, 0},
    {23, 0, 0, 4},
    {25, 0, 0, 3},
    {27, 27, 1, 0},
    {29, 0, 0, 8},
    {31, 31, 1, 0},
    {33, 33, 1, 0},
    {35, 0, 0, 3},
    {37, 0, 0, 6},
    {39, 195, 5, 0},
    {41, 0, 0, 3},
    {43, 129, 3, 0},
    {45, 45, 1, 0},
    {47, 0, 0, 6},
    {49, 0, 0, 3},
    {51, 51, 1, 0},
    {53, 3339, 63, 0},
    {55, 165, 3, 0},
    {57, 513, 9, 0},
    {59, 0, 0, 3},
    {61, 427, 7, 0},
    {63, 63, 1, 0},
    {65, 65, 1, 0},
    {67, 0, 0, 3},
    {69, 0, 0, 7},
    {71, 54315, 765, 0},
    {73, 73, 1, 0},
    {75, 0, 0, 4},
    {77, 231, 3, 0},
    {79, 888987, 11253, 0},
    {81, 0, 0, 3},
    {83, 3735, 45, 0},
    {85, 85, 1, 0},
    {87, 0, 0, 4},
    {89, 0, 0, 3},
    {91, 273, 3, 0},
    {93, 93, 1, 0},
    {95, 2565, 27, 0},
    {97, 0, 0, 3},
    {99, 99, 1, 0},
    {101, 0, 0, 5},
    {103, 0, 0, 7},
    {105, 0, 0, 6},
    {107, 107, 1, 0},
    {109, 2289, 21, 0},
    {111, 0, 0, 6},
    {113, 0, 0, 4},
    {115, 0, 0, 3},
    {117, 585, 5, 0},
    {119, 119, 1, 0},
    {121, 11253, 93, 0},
    {123, 0, 0, 3},
    {125, 0, 0, 5},
    {127, 127, 1, 0},
    {129, 129, 1, 0},
    {131, 0, 0, 3},
    {133, 3591, 27, 0},
    {135, 0, 0, 4},
    {137, 0, 0, 8},
    {139, 0, 0, 3},
    {141, 0, 0, 6},
    {143, 2145, 15, 0},
    {145, 0, 0, 4},
    {147, 0, 0, 6},
    {149, 5887437, 39513, 0},
    {151, 1057, 7, 0},
    {153, 153, 1, 0},
    {155, 0, 0, 7},
    {157, 471, 3, 0},
    {159, 3339, 21, 0},
    {161, 0, 0, 3},
    {163, 7335, 45, 0},
    {165, 165, 1, 0},
    {167, 0, 0, 5},
    {169, 0, 0, 3},
    {171, 513, 3, 0},
    {173, 5709, 33, 0},
    {175, 0, 0, 8},
    {177, 0, 0, 3},
    {179, 11277, 63, 0},
    {181, 16833, 93, 0},
    {183, 0, 0, 4},
    {185, 0, 0, 3},
    {187, 561, 3, 0},
    {189, 189, 1, 0},
    {191, 29223, 153, 0},
    {193, 0, 0, 3},
    {195, 195, 1, 0},
    {197, 0, 0, 6},
    {199, 0, 0, 9},
    {201, 0, 0, 3},
    {203, 1421, 7, 0},
    {205, 1025, 5, 0},
    {207, 0, 0, 6},
    {209, 0, 0, 4},
    {211, 633, 3, 0},
    {213, 54315, 255, 0},
    {215, 645, 3, 0},
    {217, 0, 0, 8},
    {219, 219, 1, 0},
    {221, 1105, 5, 0},
    {223, 2965677, 13299, 0},
    {225, 0, 0, 4},
    {227, 0, 0, 3},
    {229, 3435, 15, 0},
    {231, 231, 1, 0},
    {233, 59415, 255, 0},
    {235, 0, 0, 3},
    {237, 0, 0, 6},
    {239, 717, 3, 0},
};

// Representable integers counted by bit length, rows 1..13.
inline const std::vector<std::uint64_t> kPalCensus = {1, 1, 2, 4, 5, 10, 17, 33, 55, 98, 165, 309, 571};
inline const std::vector<std::uint64_t> kApalCensus = {1, 0, 2, 1, 8, 4, 24, 17, 75, 50, 247, 165, 903};

// Sequence prefixes.
inline const std::vector<std::uint64_t> kPalRepresentable = {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 27, 31, 33, 39};
inline const std::vector<std::uint64_t> kPalUnrepresentableOdd = {23, 25, 29, 35, 37, 41, 47, 49, 59};
inline const std::vector<std::uint64_t> kPalMinimalB = {1, 1, 1, 1, 1, 3, 5, 1, 1, 27, 1, 1, 1, 1, 5, 3, 1};
inline const std::vector<std::uint64_t> kApalRepresentable = {1, 5, 6, 15, 17, 18, 19, 20, 21, 24, 26};
inline const std::vector<std::uint64_t> kApalUnrepresentable = {2, 3, 4, 7, 8, 9, 10, 11, 12, 13, 14, 16, 22};
inline const std::vector<std::uint64_t> kApalInfinite = {1, 6, 15, 18, 19, 20, 24, 28, 51, 59, 61, 63, 66, 67, 68, 71, 72, 74};
inline const std::vector<std::uint64_t> kApalFinite = {5, 17, 21, 26, 65, 69, 70, 85, 89, 92, 102, 106, 116, 219, 221, 233, 239, 245, 249, 257};
inline const std::vector<std::uint64_t> kApalUnique = {5, 21, 26, 69, 85, 89, 92, 102, 106, 116, 219, 221, 233, 239, 245};

// Integers with no palindromic representation that the heuristic cannot settle.
inline const std::vector<std::uint64_t> kHeuristicFailures = {2551, 14765, 15247, 17093, 19277, 19831};

struct RecordRow {
  std::string_view target;
  std::string_view a;
  std::string_view b;
};

// Record-setting smallest palindromic representations.
inline const std::vector<RecordRow> kPalRecords = {
    {"1", "1", "1"},
    {"11", "33", "3"},
    {"13", "65", "5"},
    {"19", "513", "27"},
    {"53", "3339", "63"},
    {"71", "54315", "765"},
    {"79", "888987", "11253"},
    {"149", "5887437", "39513"},
    {"319", "224725611", "704469"},
    {"575", "147606740625", "256707375"},
    {"1823", "394070635302093", "216166009491"},
    {"2597", "96342506397593044197", "37097615093412801"},
    {"5155", "324903223321029232798074465", "63026813447338357477803"},
    {"10627", "9300753824529071312360470246068903", "875200322247960036921094405389"},
    {"22331", "79377444895975693055708664734623129867563975", "3554585325152285748766677029001080554725"},
};

// Record-setting smallest antipalindromic representations (first rows).
inline const std::vector<RecordRow> kApalRecords = {
    {"5", "10", "2"},
    {"15", "150", "10"},
    {"18", "936", "52"},
    {"59", "52140188", "883732"},
    {"66", "65099232", "986352"},
    {"83", "206712630902722", "2490513625334"},
    {"343", "841469573210301602", "2453264061837614"},
    {"835", "180616526119856633856230", "216307216910007944738"},
    {"991", "200428779760870700728006297372550", "202249020949415439685172853050"},
    {"1268", "75547761517760569279087608058268904", "59580253562902657160163728752578"},
    {"1290", "4395923940796125166581803114404301293837667532540", "3407692977361337338435506290235892475843153126"},
    {"1952", "1586681992762659022973996447792006955471260017904473853156544", "812849381538247450294055557270495366532407796057619801822"},
    {"4091", "102232724919890518755288528068181989159740544137704480818962816", "24989666321166100893495118080709359364395146452628814670976"},
    {"4460", "388987104335534771520764071813224655554298718228899978912430000", "87216839537115419623489702200274586447152178975089681370500"},
};

// Rational and base-10 giants.
inline constexpr std::string_view kPal979Over765A = "435964577851526887677597179561025269848009167916543881959761365529045212378773108135544954987";
inline constexpr std::string_view kPal979Over765B = "340666907105636434191380840004274087266319727738668099794910566526782009672892163149838499045";
inline constexpr std::string_view kBase10For436A = "4062320931846767973606063797676481390232604";
inline constexpr std::string_view kBase10For436B = "9317249843685247645885467425863489427139";
inline constexpr std::string_view kApal960Over527A = "12348833552139909752044671406834759947993350036266824277569301306583170577845541101597875372665385744362733254798839009872167396310323997903564054707791739280479525018202875380017416911647780036108289934446594455608411147054547709023944702894170275574059502236851827517100757243676048238590480983878073501486368624181821560779594741108091349800844282567959283367886584603639133542884597571276458382713915017821389156469647188254269302622887297759284818634746551843008597165831154842634971262961706100246193708891656878945533178186000927736300244493837237642640934954996982043875316156091589043679719905131206885151535751238798125446048090698071777380581553800144355418319939091821367046028246342265683451444571619483682225669077170879824401082095216563292486986361198314262037132896695751236459756715898149243274769424502571745534399185541832659389740408144936292753538473755597762748382998430083687438425790239993356699741468657156369097163207591351729526813712761138142291367822079495472760053353451631231233103882974972334985904221554459119131798186006508527927423202917093823977416643090476540757643380870573078502827509649077719055308633225064218430763198619435136533732460140152765958425178042699559254145139634308619179183869979148509912801334023097442242958880435368756508602081496654796506853640739975688601815481610964421040420056468998183952438585617409445628800";
inline constexpr std::string_view kApal960Over527B = "6778995085393471290966189407710331763117182780325642077373981029759719681796458500564667001452769049249125442998945998127741893599521611349144017532298173542513239254784286797155394492123312582321946661930578414693367369268486086099602977526278890862009747582105117814075103195226330647642899456774734099253454442649812460969631696420795980567755142618035981598829406339706066017812690541731972466343992931658200089020316737718749919252355839499107395229699409188818261152492727710488156099563353244614316754776982474171141650941690092621906488383596066914241429918003551601169053764854445235436679572920985446327978480107131887614653483122795652791215082138204245109848549897281104617975922731639599144699259628612396388466253821930903603510691853259224104835221199491266764134413081938439181553947164921511672711965325890947808987886229735220310826244887897319042827891322083355175414416846514690916719157767163019771628910398251465118963552500669126521490444401166459362032127329056368900570955488551727979005985758135854726637004957499953940060045859822910643491695768029630454269344696542851020081314290408346219781351651108289523070468447509211576054380908794080159663548431104695479260488363023612215556758945084002403572811957303400754214898989762866731290968738999306958368017654934455999074863197882487388704957092685676966980593499127128065557431896223726923310";

}  // namespace palquot::testdata
