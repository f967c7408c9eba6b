#pragma once

#include <utility>

#include "coophunt/detail/poly_term.hpp"

namespace coophunt::detail {

// focal numerators restricted to x1 = 1/2

// f1 at x1 = 1/2; exponents of (h, kappa)
inline const std::vector<poly_term<2>> slice_t1 = {
  {"3/4", {4, 3}},
  {"-11/8", {4, 2}},
  {"7/8", {4, 1}},
  {"-5/32", {4, 0}},
  {"103/8", {3, 3}},
  {"-305/16", {3, 2}},
  {"71/8", {3, 1}},
  {"-37/32", {3, 0}},
  {"-211/8", {2, 3}},
  {"695/16", {2, 2}},
  {"-199/8", {2, 1}},
  {"157/32", {2, 0}},
  {"125/8", {1, 3}},
  {"-487/16", {1, 2}},
  {"161/8", {1, 1}},
  {"-147/32", {1, 0}},
  {"-23/8", {0, 3}},
  {"23/16", {0, 2}},
};

// f2 at x1 = 1/2; exponents of (h, kappa)
inline const std::vector<poly_term<2>> slice_t2 = {
  {"-2301/1024", {11, 7}},
  {"10121/1024", {11, 6}},
  {"-18989/1024", {11, 5}},
  {"157025/8192", {11, 4}},
  {"-96051/8192", {11, 3}},
  {"138307/32768", {11, 2}},
  {"-53965/65536", {11, 1}},
  {"4375/65536", {11, 0}},
  {"-168123/2048", {10, 7}},
  {"174041/512", {10, 6}},
  {"-19163/32", {10, 5}},
  {"4754413/8192", {10, 4}},
  {"-10913089/32768", {10, 3}},
  {"3692317/32768", {10, 2}},
  {"-339229/16384", {10, 1}},
  {"103643/65536", {10, 0}},
  {"-116443/128", {9, 7}},
  {"457603/128", {9, 6}},
  {"-24491797/4096", {9, 5}},
  {"11262195/2048", {9, 4}},
  {"-24498235/8192", {9, 3}},
  {"7832907/8192", {9, 2}},
  {"-10816453/65536", {9, 1}},
  {"95701/8192", {9, 0}},
  {"-3070325/1024", {8, 7}},
  {"2925805/256", {8, 6}},
  {"-150089393/8192", {8, 5}},
  {"130383063/8192", {8, 4}},
  {"-262458887/32768", {8, 3}},
  {"18779409/8192", {8, 2}},
  {"-169995/512", {8, 1}},
  {"136337/8192", {8, 0}},
  {"1329401/512", {7, 7}},
  {"-10847359/1024", {7, 6}},
  {"20230725/1024", {7, 5}},
  {"-43934037/2048", {7, 4}},
  {"58938633/4096", {7, 3}},
  {"-96412563/16384", {7, 2}},
  {"44233259/32768", {7, 1}},
  {"-4392833/32768", {7, 0}},
  {"18347797/1024", {6, 7}},
  {"-74349967/1024", {6, 6}},
  {"256640367/2048", {6, 5}},
  {"-1914119/16", {6, 4}},
  {"1119250459/16384", {6, 3}},
  {"-382895557/16384", {6, 2}},
  {"36433987/8192", {6, 1}},
  {"-11946813/32768", {6, 0}},
  {"-1938911/128", {5, 7}},
  {"57936947/1024", {5, 6}},
  {"-199332063/2048", {5, 5}},
  {"405153609/4096", {5, 4}},
  {"-258362059/4096", {5, 3}},
  {"203397079/8192", {5, 2}},
  {"-181081217/32768", {5, 1}},
  {"2193035/4096", {5, 0}},
  {"-2394383/512", {4, 7}},
  {"56596193/1024", {4, 6}},
  {"-610456751/4096", {4, 5}},
  {"385131499/2048", {4, 4}},
  {"-2160746711/16384", {4, 3}},
  {"437556629/8192", {4, 2}},
  {"-24208343/2048", {4, 1}},
  {"4584271/4096", {4, 0}},
  {"-9305269/1024", {3, 7}},
  {"-1639627/512", {3, 6}},
  {"35055051/512", {3, 5}},
  {"-977813437/8192", {3, 4}},
  {"780930145/8192", {3, 3}},
  {"-1330168517/32768", {3, 2}},
  {"590003991/65536", {3, 1}},
  {"-54415725/65536", {3, 0}},
  {"45167817/2048", {2, 7}},
  {"-80025471/1024", {2, 6}},
  {"234734227/2048", {2, 5}},
  {"-733590357/8192", {2, 4}},
  {"1317216027/32768", {2, 3}},
  {"-349407275/32768", {2, 2}},
  {"28448175/16384", {2, 1}},
  {"-10739673/65536", {2, 0}},
  {"-738075/64", {1, 7}},
  {"42682305/1024", {1, 6}},
  {"-247755109/4096", {1, 5}},
  {"183847465/4096", {1, 4}},
  {"-143842415/8192", {1, 3}},
  {"3288537/1024", {1, 2}},
  {"-10739673/65536", {1, 1}},
  {"1912247/1024", {0, 7}},
  {"-4638393/1024", {0, 6}},
  {"29067783/8192", {0, 5}},
  {"-8371739/8192", {0, 4}},
  {"2404773/32768", {0, 3}},
};

// f3 at x1 = 1/2; exponents of (h, kappa)
inline const std::vector<poly_term<2>> slice_t3 = {
  {"140805675/262144", {18, 11}},
  {"-1823549625/524288", {18, 10}},
  {"10584251805/1048576", {18, 9}},
  {"-18136958145/1048576", {18, 8}},
  {"81351619125/4194304", {18, 7}},
  {"-62482414455/4194304", {18, 6}},
  {"133653863415/16777216", {18, 5}},
  {"-49533585015/16777216", {18, 4}},
  {"6196639185/8388608", {18, 3}},
  {"-15814746165/134217728", {18, 2}},
  {"714213105/67108864", {18, 1}},
  {"-54073725/134217728", {18, 0}},
  {"14066813003/524288", {17, 11}},
  {"-173889793043/1048576", {17, 10}},
  {"959767669343/2097152", {17, 9}},
  {"-3110902671901/4194304", {17, 8}},
  {"6544841008441/8388608", {17, 7}},
  {"-9309843187639/16777216", {17, 6}},
  {"9021391408501/33554432", {17, 5}},
  {"-5822578274983/67108864", {17, 4}},
  {"292456716245/16777216", {17, 3}},
  {"-243182479141/134217728", {17, 2}},
  {"492698185/16777216", {17, 1}},
  {"1011489335/134217728", {17, 0}},
  {"256724787989/524288", {16, 11}},
  {"-3017331869259/1048576", {16, 10}},
  {"15703258539077/2097152", {16, 9}},
  {"-47313028912627/4194304", {16, 8}},
  {"90195913848163/8388608", {16, 7}},
  {"-110614193055149/16777216", {16, 6}},
  {"82319816153271/33554432", {16, 5}},
  {"-27055878477817/67108864", {16, 4}},
  {"-2342497331229/33554432", {16, 3}},
  {"3363755770827/67108864", {16, 2}},
  {"-166806880393/16777216", {16, 1}},
  {"97189416455/134217728", {16, 0}},
  {"132505014589/32768", {15, 11}},
  {"-1467713483283/65536", {15, 10}},
  {"14009420388893/262144", {15, 9}},
  {"-572338303457/8192", {15, 8}},
  {"105807374435039/2097152", {15, 7}},
  {"-54909832140995/4194304", {15, 6}},
  {"-42741108884397/4194304", {15, 5}},
  {"101711920551979/8388608", {15, 4}},
  {"-197939029933495/33554432", {15, 3}},
  {"107413701700623/67108864", {15, 2}},
  {"-3963096559227/16777216", {15, 1}},
  {"1986147874307/134217728", {15, 0}},
  {"2299746124597/131072", {14, 11}},
  {"-6000551217195/65536", {14, 10}},
  {"49391534744377/262144", {14, 9}},
  {"-42116258021715/262144", {14, 8}},
  {"-12117673683849/262144", {14, 7}},
  {"1075315786862599/4194304", {14, 6}},
  {"-1219928679573601/4194304", {14, 5}},
  {"1544388019883439/8388608", {14, 4}},
  {"-2432717286208029/33554432", {14, 3}},
  {"1184578514293437/67108864", {14, 2}},
  {"-10210531561679/4194304", {14, 1}},
  {"19483918887719/134217728", {14, 0}},
  {"3536487624461/32768", {13, 11}},
  {"-78567797467371/131072", {13, 10}},
  {"352673051554887/262144", {13, 9}},
  {"-373828424377745/262144", {13, 8}},
  {"353851473863187/1048576", {13, 7}},
  {"1029904104097003/1048576", {13, 6}},
  {"-11634249381412761/8388608", {13, 5}},
  {"15728503582372479/16777216", {13, 4}},
  {"-12721660505193191/33554432", {13, 3}},
  {"6249914121045977/67108864", {13, 2}},
  {"-214891114082347/16777216", {13, 1}},
  {"101131586545787/134217728", {13, 0}},
  {"133611009533209/131072", {12, 11}},
  {"-774184385182879/131072", {12, 10}},
  {"3916196660238163/262144", {12, 9}},
  {"-2806571550242451/131072", {12, 8}},
  {"39208636221048247/2097152", {12, 7}},
  {"-5042439163436737/524288", {12, 6}},
  {"17663658730781923/8388608", {12, 5}},
  {"10298833250390657/16777216", {12, 4}},
  {"-20154534523490017/33554432", {12, 3}},
  {"12778711571072967/67108864", {12, 2}},
  {"-485992159203673/16777216", {12, 1}},
  {"233547778816235/134217728", {12, 0}},
  {"309438226841163/65536", {11, 11}},
  {"-3622360116941469/131072", {11, 10}},
  {"594374342567591/8192", {11, 9}},
  {"-58856803281920273/524288", {11, 8}},
  {"237123049165732323/2097152", {11, 7}},
  {"-323972986568092983/4194304", {11, 6}},
  {"151604802151654929/4194304", {11, 5}},
  {"-95911325678712155/8388608", {11, 4}},
  {"79244101754791277/33554432", {11, 3}},
  {"-20370076680812853/67108864", {11, 2}},
  {"401981282396561/16777216", {11, 1}},
  {"-163691764889881/134217728", {11, 0}},
  {"344854621900025/65536", {10, 11}},
  {"-8783744674294019/262144", {10, 10}},
  {"50919335889055481/524288", {10, 9}},
  {"-44164644626293731/262144", {10, 8}},
  {"406356447512864569/2097152", {10, 7}},
  {"-649728266860559659/4194304", {10, 6}},
  {"737423451445195389/8388608", {10, 5}},
  {"-149202897831001767/4194304", {10, 4}},
  {"341135256535815927/33554432", {10, 3}},
  {"-16709592579529535/8388608", {10, 2}},
  {"8299648740720133/33554432", {10, 1}},
  {"-2031963839835047/134217728", {10, 0}},
  {"-5365691211578413/262144", {9, 11}},
  {"56428265198672697/524288", {9, 10}},
  {"-262129247245476701/1048576", {9, 9}},
  {"701633845403018371/2097152", {9, 8}},
  {"-1177799048768276503/4194304", {9, 7}},
  {"1246553832491357653/8388608", {9, 6}},
  {"-748161364176247753/16777216", {9, 5}},
  {"98785446239441163/33554432", {9, 4}},
  {"110110170694944625/33554432", {9, 3}},
  {"-23708757829617739/16777216", {9, 2}},
  {"4403991625950475/16777216", {9, 1}},
  {"-2740202277870123/134217728", {9, 0}},
  {"-8401522973928489/262144", {8, 11}},
  {"98318295117756985/524288", {8, 10}},
  {"-519146845018170287/1048576", {8, 9}},
  {"1631592546187268869/2097152", {8, 8}},
  {"-3392140058111290011/4194304", {8, 7}},
  {"4906942566037650943/8388608", {8, 6}},
  {"-5058813514299363335/16777216", {8, 5}},
  {"3740725840940176885/33554432", {8, 4}},
  {"-980452616030700471/33554432", {8, 3}},
  {"349772383332162145/67108864", {8, 2}},
  {"-9564712026188883/16777216", {8, 1}},
  {"3829178058687173/134217728", {8, 0}},
  {"1052760159021207/16384", {7, 11}},
  {"-10811316295905353/32768", {7, 10}},
  {"198122527844521537/262144", {7, 9}},
  {"-265150707542975635/262144", {7, 8}},
  {"1816588892031505853/2097152", {7, 7}},
  {"-2027060077374925129/4194304", {7, 6}},
  {"691174193024603405/4194304", {7, 5}},
  {"-193201212377419843/8388608", {7, 4}},
  {"-218952263689161509/33554432", {7, 3}},
  {"270183961509796813/67108864", {7, 2}},
  {"-14063809907226017/16777216", {7, 1}},
  {"9114195900415897/134217728", {7, 0}},
  {"3809108395689655/131072", {6, 11}},
  {"-13301070903895537/65536", {6, 10}},
  {"161939442055308807/262144", {6, 9}},
  {"-71910528092009819/65536", {6, 8}},
  {"668088573865345243/524288", {6, 7}},
  {"-4279401476414670115/4194304", {6, 6}},
  {"2411657695473752887/4194304", {6, 5}},
  {"-1904307438061698571/8388608", {6, 4}},
  {"2038228848786011337/33554432", {6, 3}},
  {"-683464465268328173/67108864", {6, 2}},
  {"7489167922164167/8388608", {6, 1}},
  {"-3080665291005891/134217728", {6, 0}},
  {"-7087927503504973/65536", {5, 11}},
  {"37836610685814319/65536", {5, 10}},
  {"-180662883941849255/131072", {5, 9}},
  {"1009882244567901435/524288", {5, 8}},
  {"-904661121754792377/524288", {5, 7}},
  {"2121211204107716279/2097152", {5, 6}},
  {"-3106230583202516513/8388608", {5, 5}},
  {"1114769960820619167/16777216", {5, 4}},
  {"179759392129858427/33554432", {5, 3}},
  {"-378982574176362297/67108864", {5, 2}},
  {"19364641256097175/16777216", {5, 1}},
  {"-11146213901963847/134217728", {5, 0}},
  {"8860041535304313/131072", {4, 11}},
  {"-18392217328617501/65536", {4, 10}},
  {"30138868187655269/65536", {4, 9}},
  {"-160209984064619469/524288", {4, 8}},
  {"-204101442145165293/2097152", {4, 7}},
  {"747313276356437947/2097152", {4, 6}},
  {"-2667804785651032537/8388608", {4, 5}},
  {"2637407836167327937/16777216", {4, 4}},
  {"-1564177676844557451/33554432", {4, 3}},
  {"528073158829897101/67108864", {4, 2}},
  {"-10216301643046443/16777216", {4, 1}},
  {"866187180306441/134217728", {4, 0}},
  {"-232825894385665/65536", {3, 11}},
  {"-8051201309996249/131072", {3, 10}},
  {"43149482239296513/131072", {3, 9}},
  {"-369808982663851785/524288", {3, 8}},
  {"1786840876165227489/2097152", {3, 7}},
  {"-2702727036469346781/4194304", {3, 6}},
  {"1320025786764121983/4194304", {3, 5}},
  {"-819746264216279837/8388608", {3, 4}},
  {"602709015627097519/33554432", {3, 3}},
  {"-108528488169568551/67108864", {3, 2}},
  {"601044390430155/16777216", {3, 1}},
  {"-34495848583875/134217728", {3, 0}},
  {"-3143704481133287/262144", {2, 11}},
  {"48940599416021407/524288", {2, 10}},
  {"-284481558973120911/1048576", {2, 9}},
  {"438342605782982473/1048576", {2, 8}},
  {"-1621405769881797807/4194304", {2, 7}},
  {"469847566540045935/2097152", {2, 6}},
  {"-1355534311385745033/16777216", {2, 5}},
  {"285342104847206251/16777216", {2, 4}},
  {"-58657218181534119/33554432", {2, 3}},
  {"6307841010550149/134217728", {2, 2}},
  {"-34495848583875/67108864", {2, 1}},
  {"2486065860810919/524288", {1, 11}},
  {"-28933067785322487/1048576", {1, 10}},
  {"133399420063046291/2097152", {1, 9}},
  {"-327624048583336369/4194304", {1, 8}},
  {"472878761924713581/8388608", {1, 7}},
  {"-408234751472010203/16777216", {1, 6}},
  {"200000621140535685/33554432", {1, 5}},
  {"-46326596042412903/67108864", {1, 4}},
  {"600423209256465/33554432", {1, 3}},
  {"-34495848583875/134217728", {1, 2}},
  {"-300086925057803/524288", {0, 11}},
  {"2607920428387489/1048576", {0, 10}},
  {"-8571683172835871/2097152", {0, 9}},
  {"13629452279521457/4194304", {0, 8}},
  {"-10764990449060821/8388608", {0, 7}},
  {"3668430461372279/16777216", {0, 6}},
  {"-287052507131985/33554432", {0, 5}},
  {"18009884805255/67108864", {0, 4}},
};

// printed factorization of res(f1, f2, kappa) on the slice: constant times factors^power
inline const char* const slice_res_constant = "-1/72057594037927936";

// factor 0, power 4; exponents of (h)
inline const std::vector<poly_term<1>> slice_res_factor0 = {
  {"1", {1}},
};

// factor 1, power 2; exponents of (h)
inline const std::vector<poly_term<1>> slice_res_factor1 = {
  {"1", {1}},
  {"-1", {0}},
};

// factor 2, power 2; exponents of (h)
inline const std::vector<poly_term<1>> slice_res_factor2 = {
  {"2", {1}},
  {"-1", {0}},
};

// factor 3, power 6; exponents of (h)
inline const std::vector<poly_term<1>> slice_res_factor3 = {
  {"1", {1}},
  {"3", {0}},
};

// factor 4, power 2; exponents of (h)
inline const std::vector<poly_term<1>> slice_res_factor4 = {
  {"1", {1}},
  {"23", {0}},
};

// factor 5, power 4; exponents of (h)
inline const std::vector<poly_term<1>> slice_res_factor5 = {
  {"1", {2}},
  {"2", {1}},
  {"-7", {0}},
};

// factor 6, power 2; exponents of (h)
inline const std::vector<poly_term<1>> slice_res_factor6 = {
  {"3", {3}},
  {"16", {2}},
  {"15", {1}},
  {"14", {0}},
};

// factor 7, power 1; exponents of (h)
inline const std::vector<poly_term<1>> slice_res_factor7 = {
  {"4", {3}},
  {"6", {2}},
  {"-15", {1}},
  {"21", {0}},
};

// factor 8, power 1; exponents of (h)
inline const std::vector<poly_term<1>> slice_res_factor8 = {
  {"69324", {25}},
  {"3784256", {24}},
  {"88925415", {23}},
  {"1210510049", {22}},
  {"9321912097", {21}},
  {"31150056402", {20}},
  {"-48628636343", {19}},
  {"-621513307905", {18}},
  {"-449862701721", {17}},
  {"6309033684670", {16}},
  {"9292970454326", {15}},
  {"-38554634019094", {14}},
  {"-64709338716470", {13}},
  {"130467748580116", {12}},
  {"188895548702946", {11}},
  {"-213048078842242", {10}},
  {"-167516634645510", {9}},
  {"80910436459484", {8}},
  {"-138237240652045", {7}},
  {"193470794940005", {6}},
  {"135195659870885", {5}},
  {"-204505372471814", {4}},
  {"105439411571397", {3}},
  {"-32169849655725", {2}},
  {"3724806231363", {1}},
  {"-132182987706", {0}},
};

inline const std::vector<std::pair<const std::vector<poly_term<1>>*, int>> slice_res_factors = {
  {&slice_res_factor0, 4},
  {&slice_res_factor1, 2},
  {&slice_res_factor2, 2},
  {&slice_res_factor3, 6},
  {&slice_res_factor4, 2},
  {&slice_res_factor5, 4},
  {&slice_res_factor6, 2},
  {&slice_res_factor7, 1},
  {&slice_res_factor8, 1},
};

// numerator of kappa as a rational function of h; exponents of (h)
inline const std::vector<poly_term<1>> slice_kappa_num = {
  {"-104424", {37}},
  {"-15806636", {36}},
  {"-1060235958", {35}},
  {"-41360310493", {34}},
  {"-1033237688608", {33}},
  {"-17093052680880", {32}},
  {"-185234034631326", {31}},
  {"-1214782758103459", {30}},
  {"-3410711864703916", {29}},
  {"10263855243151606", {28}},
  {"100244026439753366", {27}},
  {"87721813509906287", {26}},
  {"-1171764771207211552", {25}},
  {"-2240927152940620996", {24}},
  {"9772808464958064482", {23}},
  {"22749592143215129389", {22}},
  {"-57638777043031711252", {21}},
  {"-121537499193080672062", {20}},
  {"246262891452996520490", {19}},
  {"282788105181178447125", {18}},
  {"-766714881123795937480", {17}},
  {"109543664161325840664", {16}},
  {"1226489872897021980470", {15}},
  {"-1630300109228497230369", {14}},
  {"806552374484503612940", {13}},
  {"1077797869120164446890", {12}},
  {"-4106839101181189996638", {11}},
  {"3848854638191389868333", {10}},
  {"-845991926265373897616", {9}},
  {"-2063653729639496063332", {8}},
  {"4536379008677843744262", {7}},
  {"-4748641501899313027689", {6}},
  {"3172898299865472357660", {5}},
  {"-1353005890097332372470", {4}},
  {"365758729089763817556", {3}},
  {"-58630913767660198356", {2}},
  {"2104881200090531352", {1}},
};

// denominator of kappa as a rational function of h; exponents of (h)
inline const std::vector<poly_term<1>> slice_kappa_den = {
  {"54480", {37}},
  {"-25280", {36}},
  {"-429890512", {35}},
  {"-29584573272", {34}},
  {"-994950290565", {33}},
  {"-20178839743180", {32}},
  {"-258930573495916", {31}},
  {"-2018820796155987", {30}},
  {"-7678410965617803", {29}},
  {"6781705163337138", {28}},
  {"174416098225939254", {27}},
  {"344695353057908799", {26}},
  {"-1704274219197667845", {25}},
  {"-5694732570594415444", {24}},
  {"12128022268874697944", {23}},
  {"49503457543617590261", {22}},
  {"-66857275387628213603", {21}},
  {"-246372492634932965506", {20}},
  {"309415046153421965826", {19}},
  {"585374819884899902511", {18}},
  {"-1139312137822506612103", {17}},
  {"11079676686133307176", {16}},
  {"2115483758750366890388", {15}},
  {"-2796158967212325979553", {14}},
  {"1112696763869892676919", {13}},
  {"2422679013780879493454", {12}},
  {"-7011710911652753395142", {11}},
  {"6151475587496528241397", {10}},
  {"-1447591488200152741791", {9}},
  {"-3831489956406538933284", {8}},
  {"8118838419345304712896", {7}},
  {"-8146426987531933537793", {6}},
  {"5606696051148996416871", {5}},
  {"-2476126155714773703294", {4}},
  {"691746159028922895774", {3}},
  {"-118440927041560529931", {2}},
  {"3814475091599076912", {1}},
  {"-2631715218685476", {0}},
};


}  // namespace coophunt::detail
