#pragma once

#include "coophunt/detail/poly_term.hpp"

namespace coophunt::detail {

// numerator of the first focal value; exponents of (x1, h, kappa)
inline const std::vector<poly_term<3>> focal_f1 = {
  {"-10", {6, 4, 0}},
  {"14", {6, 3, 0}},
  {"2", {6, 2, 0}},
  {"-6", {6, 1, 0}},
  {"28", {5, 4, 1}},
  {"-60", {5, 3, 1}},
  {"36", {5, 2, 1}},
  {"-4", {5, 1, 1}},
  {"-22", {4, 4, 2}},
  {"55", {4, 3, 2}},
  {"-22", {4, 3, 0}},
  {"-45", {4, 2, 2}},
  {"-2", {4, 2, 0}},
  {"13", {4, 1, 2}},
  {"24", {4, 1, 0}},
  {"-1", {4, 0, 2}},
  {"6", {3, 4, 3}},
  {"-17", {3, 3, 3}},
  {"86", {3, 3, 1}},
  {"17", {3, 2, 3}},
  {"-88", {3, 2, 1}},
  {"-7", {3, 1, 3}},
  {"2", {3, 1, 1}},
  {"1", {3, 0, 3}},
  {"-90", {2, 3, 2}},
  {"137", {2, 2, 2}},
  {"20", {2, 2, 0}},
  {"-53", {2, 1, 2}},
  {"-24", {2, 1, 0}},
  {"6", {2, 0, 2}},
  {"30", {1, 3, 3}},
  {"-57", {1, 2, 3}},
  {"-30", {1, 2, 1}},
  {"33", {1, 1, 3}},
  {"40", {1, 1, 1}},
  {"-6", {1, 0, 3}},
  {"12", {0, 2, 2}},
  {"-18", {0, 1, 2}},
};

// numerator of the second focal value; exponents of (x1, h, kappa)
inline const std::vector<poly_term<3>> focal_f2 = {
  {"17500", {18, 11, 0}},
  {"-107988", {18, 10, 0}},
  {"278288", {18, 9, 0}},
  {"-382832", {18, 8, 0}},
  {"295272", {18, 7, 0}},
  {"-119800", {18, 6, 0}},
  {"20368", {18, 5, 0}},
  {"-2928", {18, 4, 0}},
  {"2972", {18, 3, 0}},
  {"-852", {18, 2, 0}},
  {"-107930", {17, 11, 1}},
  {"714720", {17, 10, 1}},
  {"-2017218", {17, 9, 1}},
  {"3137152", {17, 8, 1}},
  {"-2886900", {17, 7, 1}},
  {"1549056", {17, 6, 1}},
  {"-426260", {17, 5, 1}},
  {"31488", {17, 4, 1}},
  {"4878", {17, 3, 1}},
  {"1440", {17, 2, 1}},
  {"-426", {17, 1, 1}},
  {"276614", {16, 11, 2}},
  {"-1939238", {16, 10, 2}},
  {"130640", {16, 10, 0}},
  {"5876856", {16, 9, 2}},
  {"-681596", {16, 9, 0}},
  {"-10024048", {16, 8, 2}},
  {"1423124", {16, 8, 0}},
  {"10476284", {16, 7, 2}},
  {"-1473452", {16, 7, 0}},
  {"-6819372", {16, 6, 2}},
  {"731460", {16, 6, 0}},
  {"2669408", {16, 5, 2}},
  {"-113780", {16, 5, 0}},
  {"-569536", {16, 4, 2}},
  {"-4164", {16, 4, 0}},
  {"59598", {16, 3, 2}},
  {"-21604", {16, 3, 0}},
  {"-8574", {16, 2, 2}},
  {"9372", {16, 2, 0}},
  {"2008", {16, 1, 2}},
  {"-384204", {15, 11, 3}},
  {"2823415", {15, 10, 3}},
  {"-857138", {15, 10, 1}},
  {"-9054880", {15, 9, 3}},
  {"4864814", {15, 9, 1}},
  {"16559477", {15, 8, 3}},
  {"-11399408", {15, 8, 1}},
  {"-18904544", {15, 7, 3}},
  {"14016856", {15, 7, 1}},
  {"13820510", {15, 6, 3}},
  {"-9366676", {15, 6, 1}},
  {"-6341800", {15, 5, 3}},
  {"3022228", {15, 5, 1}},
  {"1682050", {15, 4, 3}},
  {"-209984", {15, 4, 1}},
  {"-198292", {15, 3, 3}},
  {"-59752", {15, 3, 1}},
  {"-3781", {15, 2, 3}},
  {"-15626", {15, 2, 1}},
  {"2184", {15, 1, 3}},
  {"4686", {15, 1, 1}},
  {"-135", {15, 0, 3}},
  {"314050", {14, 11, 4}},
  {"-2404502", {14, 10, 4}},
  {"2330968", {14, 10, 2}},
  {"8094776", {14, 9, 4}},
  {"-14143952", {14, 9, 2}},
  {"344408", {14, 9, 0}},
  {"-15696066", {14, 8, 4}},
  {"36160430", {14, 8, 2}},
  {"-1467500", {14, 8, 0}},
  {"19264736", {14, 7, 4}},
  {"-50187706", {14, 7, 2}},
  {"2302948", {14, 7, 0}},
  {"-15451208", {14, 6, 4}},
  {"40424510", {14, 6, 2}},
  {"-1467552", {14, 6, 0}},
  {"8029116", {14, 5, 4}},
  {"-18547338", {14, 5, 2}},
  {"136448", {14, 5, 0}},
  {"-2551456", {14, 4, 4}},
  {"4343322", {14, 4, 2}},
  {"146420", {14, 4, 0}},
  {"413566", {14, 3, 4}},
  {"-428670", {14, 3, 2}},
  {"47428", {14, 3, 0}},
  {"-6706", {14, 2, 4}},
  {"70306", {14, 2, 2}},
  {"-42600", {14, 2, 0}},
  {"-6932", {14, 1, 4}},
  {"-21870", {14, 1, 2}},
  {"626", {14, 0, 4}},
  {"-151912", {13, 11, 5}},
  {"1207176", {13, 10, 5}},
  {"-3434126", {13, 10, 3}},
  {"-4245226", {13, 9, 5}},
  {"22010917", {13, 9, 3}},
  {"-2442184", {13, 9, 1}},
  {"8672407", {13, 8, 5}},
  {"-60233647", {13, 8, 3}},
  {"11609268", {13, 8, 1}},
  {"-11346432", {13, 7, 5}},
  {"91245490", {13, 7, 3}},
  {"-21616956", {13, 7, 1}},
  {"9867756", {13, 6, 5}},
  {"-82705986", {13, 6, 3}},
  {"19214456", {13, 6, 1}},
  {"-5712788", {13, 5, 5}},
  {"44959348", {13, 5, 3}},
  {"-7418484", {13, 5, 1}},
  {"2126706", {13, 4, 5}},
  {"-13652892", {13, 4, 3}},
  {"306420", {13, 4, 1}},
  {"-460392", {13, 3, 5}},
  {"1807982", {13, 3, 3}},
  {"287948", {13, 3, 1}},
  {"40532", {13, 2, 5}},
  {"19200", {13, 2, 3}},
  {"80832", {13, 2, 1}},
  {"2766", {13, 1, 5}},
  {"-17849", {13, 1, 3}},
  {"-21300", {13, 1, 1}},
  {"-593", {13, 0, 5}},
  {"1563", {13, 0, 3}},
  {"40484", {12, 11, 6}},
  {"-333160", {12, 10, 6}},
  {"2978332", {12, 10, 4}},
  {"1220496", {12, 9, 6}},
  {"-20017072", {12, 9, 4}},
  {"7085138", {12, 9, 2}},
  {"-2617592", {12, 8, 6}},
  {"58021364", {12, 8, 4}},
  {"-36544604", {12, 8, 2}},
  {"352080", {12, 8, 0}},
  {"3633812", {12, 7, 6}},
  {"-94427714", {12, 7, 4}},
  {"76378122", {12, 7, 2}},
  {"-1105060", {12, 7, 0}},
  {"-3404980", {12, 6, 6}},
  {"93895274", {12, 6, 4}},
  {"-81632518", {12, 6, 2}},
  {"880956", {12, 6, 0}},
  {"2175196", {12, 5, 6}},
  {"-57875614", {12, 5, 4}},
  {"45766656", {12, 5, 2}},
  {"364452", {12, 5, 0}},
  {"-931876", {12, 4, 6}},
  {"21124822", {12, 4, 4}},
  {"-12010472", {12, 4, 2}},
  {"-609692", {12, 4, 0}},
  {"254552", {12, 3, 6}},
  {"-3840814", {12, 3, 4}},
  {"1137650", {12, 3, 2}},
  {"15024", {12, 3, 0}},
  {"-39412", {12, 2, 6}},
  {"73994", {12, 2, 4}},
  {"-285526", {12, 2, 2}},
  {"102240", {12, 2, 0}},
  {"2436", {12, 1, 6}},
  {"75006", {12, 1, 4}},
  {"105554", {12, 1, 2}},
  {"44", {12, 0, 6}},
  {"-7578", {12, 0, 4}},
  {"-4602", {11, 11, 7}},
  {"39165", {11, 10, 7}},
  {"-1528226", {11, 10, 5}},
  {"-149188", {11, 9, 7}},
  {"10721832", {11, 9, 5}},
  {"-11061358", {11, 9, 3}},
  {"335058", {11, 8, 7}},
  {"-32720714", {11, 8, 5}},
  {"60863332", {11, 8, 3}},
  {"-2918852", {11, 8, 1}},
  {"-491692", {11, 7, 7}},
  {"56732858", {11, 7, 5}},
  {"-138436866", {11, 7, 3}},
  {"11127224", {11, 7, 1}},
  {"493434", {11, 6, 7}},
  {"-61144908", {11, 6, 5}},
  {"166424286", {11, 6, 3}},
  {"-14617184", {11, 6, 1}},
  {"-344088", {11, 5, 7}},
  {"41977254", {11, 5, 5}},
  {"-111443144", {11, 5, 3}},
  {"6357864", {11, 5, 1}},
  {"165788", {11, 4, 7}},
  {"-17936072", {11, 4, 5}},
  {"39479708", {11, 4, 3}},
  {"1088932", {11, 4, 1}},
  {"-53658", {11, 3, 7}},
  {"4333094", {11, 3, 5}},
  {"-5875322", {11, 3, 3}},
  {"-854608", {11, 3, 1}},
  {"10977", {11, 2, 7}},
  {"-407578", {11, 2, 5}},
  {"24646", {11, 2, 3}},
  {"-234496", {11, 2, 1}},
  {"-1252", {11, 1, 7}},
  {"-35182", {11, 1, 5}},
  {"31474", {11, 1, 3}},
  {"51120", {11, 1, 1}},
  {"58", {11, 0, 7}},
  {"7642", {11, 0, 5}},
  {"-6756", {11, 0, 3}},
  {"431372", {10, 10, 6}},
  {"-3150844", {10, 9, 6}},
  {"10129442", {10, 9, 4}},
  {"10088762", {10, 8, 6}},
  {"-58882486", {10, 8, 4}},
  {"9380176", {10, 8, 2}},
  {"-18548908", {10, 7, 6}},
  {"143527112", {10, 7, 4}},
  {"-40106292", {10, 7, 2}},
  {"16924", {10, 7, 0}},
  {"21525950", {10, 6, 6}},
  {"-188934326", {10, 6, 4}},
  {"64492098", {10, 6, 2}},
  {"267216", {10, 6, 0}},
  {"-16295660", {10, 5, 6}},
  {"143419798", {10, 5, 4}},
  {"-46510338", {10, 5, 2}},
  {"-1060660", {10, 5, 0}},
  {"8005714", {10, 4, 6}},
  {"-61205630", {10, 4, 4}},
  {"13220918", {10, 4, 2}},
  {"1115656", {10, 4, 0}},
  {"-2437892", {10, 3, 6}},
  {"12408228", {10, 3, 4}},
  {"-911022", {10, 3, 2}},
  {"-202816", {10, 3, 0}},
  {"407118", {10, 2, 6}},
  {"-193650", {10, 2, 4}},
  {"716672", {10, 2, 2}},
  {"-136320", {10, 2, 0}},
  {"-24680", {10, 1, 6}},
  {"-302772", {10, 1, 4}},
  {"-282212", {10, 1, 2}},
  {"-932", {10, 0, 6}},
  {"34284", {10, 0, 4}},
  {"-51822", {9, 10, 7}},
  {"393429", {9, 9, 7}},
  {"-5476606", {9, 9, 5}},
  {"-1318727", {9, 8, 7}},
  {"33444974", {9, 8, 5}},
  {"-15810892", {9, 8, 3}},
  {"2562556", {9, 7, 7}},
  {"-86657724", {9, 7, 5}},
  {"73296798", {9, 7, 3}},
  {"-947338", {9, 7, 1}},
  {"-3185356", {9, 6, 7}},
  {"123374288", {9, 6, 5}},
  {"-132844136", {9, 6, 3}},
  {"1890508", {9, 6, 1}},
  {"2634122", {9, 5, 7}},
  {"-104095536", {9, 5, 5}},
  {"116885884", {9, 5, 3}},
  {"1301726", {9, 5, 1}},
  {"-1458274", {9, 4, 7}},
  {"51871365", {9, 4, 5}},
  {"-49536546", {9, 4, 3}},
  {"-4239896", {9, 4, 1}},
  {"528852", {9, 3, 7}},
  {"-13879160", {9, 3, 5}},
  {"8298632", {9, 3, 3}},
  {"1681112", {9, 3, 1}},
  {"-118566", {9, 2, 7}},
  {"1261078", {9, 2, 5}},
  {"-401202", {9, 2, 3}},
  {"382048", {9, 2, 1}},
  {"14481", {9, 1, 7}},
  {"195546", {9, 1, 5}},
  {"97638", {9, 1, 3}},
  {"-68160", {9, 1, 1}},
  {"-695", {9, 0, 7}},
  {"-38225", {9, 0, 5}},
  {"13824", {9, 0, 3}},
  {"1626636", {8, 9, 6}},
  {"-10403186", {8, 8, 6}},
  {"15414008", {8, 8, 4}},
  {"28529650", {8, 7, 6}},
  {"-76232420", {8, 7, 4}},
  {"4489754", {8, 7, 2}},
  {"-43656336", {8, 6, 6}},
  {"150905568", {8, 6, 4}},
  {"-14186490", {8, 6, 2}},
  {"-195008", {8, 6, 0}},
  {"40553514", {8, 5, 6}},
  {"-150826134", {8, 5, 4}},
  {"12301406", {8, 5, 2}},
  {"742224", {8, 5, 0}},
  {"-23215530", {8, 4, 6}},
  {"77852138", {8, 4, 4}},
  {"-188650", {8, 4, 2}},
  {"-913616", {8, 4, 0}},
  {"7856942", {8, 3, 6}},
  {"-17789498", {8, 3, 4}},
  {"-1799432", {8, 3, 2}},
  {"270976", {8, 3, 0}},
  {"-1360084", {8, 2, 6}},
  {"222082", {8, 2, 4}},
  {"-1046884", {8, 2, 2}},
  {"95424", {8, 2, 0}},
  {"60122", {8, 1, 6}},
  {"527916", {8, 1, 4}},
  {"430296", {8, 1, 2}},
  {"8272", {8, 0, 6}},
  {"-73660", {8, 0, 4}},
  {"-205476", {7, 9, 7}},
  {"1374022", {7, 8, 7}},
  {"-8796852", {7, 8, 5}},
  {"-3978926", {7, 7, 7}},
  {"46032964", {7, 7, 5}},
  {"-9181928", {7, 7, 3}},
  {"6519790", {7, 6, 7}},
  {"-98157456", {7, 6, 5}},
  {"33780779", {7, 6, 3}},
  {"745078", {7, 6, 1}},
  {"-6622696", {7, 5, 7}},
  {"108707402", {7, 5, 5}},
  {"-42258130", {7, 5, 3}},
  {"-3191782", {7, 5, 1}},
  {"4289715", {7, 4, 7}},
  {"-65331308", {7, 4, 5}},
  {"19890133", {7, 4, 3}},
  {"4468304", {7, 4, 1}},
  {"-1750538", {7, 3, 7}},
  {"19472104", {7, 3, 5}},
  {"-2668196", {7, 3, 3}},
  {"-1742048", {7, 3, 1}},
  {"425400", {7, 2, 7}},
  {"-1521032", {7, 2, 5}},
  {"872746", {7, 2, 3}},
  {"-327264", {7, 2, 1}},
  {"-53716", {7, 1, 7}},
  {"-497222", {7, 1, 5}},
  {"-421964", {7, 1, 3}},
  {"47712", {7, 1, 1}},
  {"2425", {7, 0, 7}},
  {"91400", {7, 0, 5}},
  {"-13440", {7, 0, 3}},
  {"2742600", {6, 8, 6}},
  {"-15122484", {6, 7, 6}},
  {"10114902", {6, 7, 4}},
  {"34513730", {6, 6, 6}},
  {"-40728222", {6, 6, 4}},
  {"-855560", {6, 6, 2}},
  {"-41924564", {6, 5, 6}},
  {"59566760", {6, 5, 4}},
  {"4759012", {6, 5, 2}},
  {"-91120", {6, 5, 0}},
  {"28858868", {6, 4, 6}},
  {"-37765392", {6, 4, 4}},
  {"-7988952", {6, 4, 2}},
  {"239264", {6, 4, 0}},
  {"-10894374", {6, 3, 6}},
  {"9008306", {6, 3, 4}},
  {"3593548", {6, 3, 2}},
  {"-108608", {6, 3, 0}},
  {"1848968", {6, 2, 6}},
  {"41158", {6, 2, 4}},
  {"840256", {6, 2, 2}},
  {"-27264", {6, 2, 0}},
  {"6742", {6, 1, 6}},
  {"-314448", {6, 1, 4}},
  {"-348304", {6, 1, 2}},
  {"-29486", {6, 0, 6}},
  {"76936", {6, 0, 4}},
  {"-362268", {5, 8, 7}},
  {"2101030", {5, 7, 7}},
  {"-6302052", {5, 7, 5}},
  {"-5117896", {5, 6, 7}},
  {"27175264", {5, 6, 5}},
  {"-247206", {5, 6, 3}},
  {"6785106", {5, 5, 7}},
  {"-44151230", {5, 5, 5}},
  {"-1728483", {5, 5, 3}},
  {"466540", {5, 5, 1}},
  {"-5292870", {5, 4, 7}},
  {"33086793", {5, 4, 5}},
  {"5819287", {5, 4, 3}},
  {"-1248352", {5, 4, 1}},
  {"2441190", {5, 3, 7}},
  {"-10531464", {5, 3, 5}},
  {"-3520094", {5, 3, 3}},
  {"630816", {5, 3, 1}},
  {"-627096", {5, 2, 7}},
  {"235693", {5, 2, 5}},
  {"-878328", {5, 2, 3}},
  {"116864", {5, 2, 1}},
  {"74882", {5, 1, 7}},
  {"594764", {5, 1, 5}},
  {"549880", {5, 1, 3}},
  {"-13632", {5, 1, 1}},
  {"-2078", {5, 0, 7}},
  {"-107768", {5, 0, 5}},
  {"4944", {5, 0, 3}},
  {"2103660", {4, 7, 6}},
  {"-9628048", {4, 6, 6}},
  {"1436748", {4, 6, 4}},
  {"17072078", {4, 5, 6}},
  {"-2987900", {4, 5, 4}},
  {"-995922", {4, 5, 2}},
  {"-14640960", {4, 4, 6}},
  {"298588", {4, 4, 4}},
  {"2699868", {4, 4, 2}},
  {"5968058", {4, 3, 6}},
  {"1423208", {4, 3, 4}},
  {"-1425224", {4, 3, 2}},
  {"-735450", {4, 2, 6}},
  {"43796", {4, 2, 4}},
  {"-325392", {4, 2, 2}},
  {"-187156", {4, 1, 6}},
  {"-182952", {4, 1, 4}},
  {"115584", {4, 1, 2}},
  {"47818", {4, 0, 6}},
  {"-31488", {4, 0, 4}},
  {"-293922", {3, 7, 7}},
  {"1422813", {3, 6, 7}},
  {"-1354986", {3, 6, 5}},
  {"-2735790", {3, 5, 7}},
  {"3931028", {3, 5, 5}},
  {"1135266", {3, 5, 3}},
  {"2655264", {3, 4, 7}},
  {"-3252678", {3, 4, 5}},
  {"-3120294", {3, 4, 3}},
  {"-1348944", {3, 3, 7}},
  {"410108", {3, 3, 5}},
  {"1700980", {3, 3, 3}},
  {"321177", {3, 2, 7}},
  {"417480", {3, 2, 5}},
  {"492776", {3, 2, 3}},
  {"-17052", {3, 1, 7}},
  {"-201136", {3, 1, 5}},
  {"-253200", {3, 1, 3}},
  {"-3546", {3, 0, 7}},
  {"50184", {3, 0, 5}},
  {"560844", {2, 6, 6}},
  {"-1849680", {2, 5, 6}},
  {"-729306", {2, 5, 4}},
  {"1985148", {2, 4, 6}},
  {"2040538", {2, 4, 4}},
  {"-650856", {2, 3, 6}},
  {"-1163128", {2, 3, 4}},
  {"-168150", {2, 2, 6}},
  {"-374504", {2, 2, 4}},
  {"151050", {2, 1, 6}},
  {"237792", {2, 1, 4}},
  {"-28356", {2, 0, 6}},
  {"-89910", {1, 6, 7}},
  {"323109", {1, 5, 7}},
  {"250506", {1, 5, 5}},
  {"-403857", {1, 4, 7}},
  {"-717654", {1, 4, 5}},
  {"191826", {1, 3, 7}},
  {"438468", {1, 3, 5}},
  {"-3186", {1, 2, 7}},
  {"129360", {1, 2, 5}},
  {"-22698", {1, 1, 7}},
  {"-100824", {1, 1, 5}},
  {"4716", {1, 0, 7}},
  {"-35964", {0, 5, 6}},
  {"106218", {0, 4, 6}},
  {"-71640", {0, 3, 6}},
  {"-14112", {0, 2, 6}},
  {"15300", {0, 1, 6}},
};


}  // namespace coophunt::detail
