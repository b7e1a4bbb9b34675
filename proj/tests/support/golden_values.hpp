#pragma once

// Generated by tests/oracles/golden.py; do not edit.

namespace golden {

inline constexpr double kOmega2Half = -1.6449340668482264365;
inline constexpr double kOmega3Point3 = -0.76191344428538183819;
inline constexpr double kOmega2p5Point1 = 1.5946113643605981946;
inline constexpr double kOmega1p5Point25 = -0.54104064971733622631;
inline constexpr double kOmega5Point4 = -1.5972843890565367546;
inline constexpr double kSd1n2 = 6.2448078101205637504;
inline constexpr double kEd1n2M4 = 6.9022033008170189641;
inline constexpr double kThetaS2n4 = 9.2404470657380033476;
inline constexpr double kCardUpper = 73.452017244401040367;
inline constexpr unsigned kLinfV1Z2 = 27;
inline constexpr double kLinfV1S = 0.075283728591828839875;
inline constexpr double kLinfV1M = 6.0325731833951842027;
inline constexpr double kLinfV1Bound = 10.922908585411081911;
inline constexpr double kLinfV2STilde = 0.0017227422011965013917;
inline constexpr double kLinfV2M = 175047.05518643293846;
inline constexpr double kLinfV2Bound = 1.7655227668186173773;
inline constexpr double kOmega2Grid[1000] = {
    3.2898681336964528729, 3.2701486641030763344, 3.2504686729273041533, 3.2308281601691363297,
    3.2112271258285728635, 3.1916655699056137547, 3.1721434924002590033, 3.1526608933125086094,
    3.1332177726423625729, 3.1138141303898208939, 3.0944499665548835723, 3.0751252811375506081,
    3.0558400741378220014, 3.0365943455556977521, 3.0173880953911778602, 2.9982213236442623258,
    2.9790940303149511488, 2.9600062154032443292, 2.9409578789091418671, 2.9219490208326437624,
    2.9029796411737500151, 2.8840497399324606253, 2.8651593171087755929, 2.8463083727026949179,
    2.8274969067142186004, 2.8087249191433466403, 2.7899924099900790376, 2.7712993792544157924,
    2.7526458269363569046, 2.7340317530359023742, 2.7154571575530522013, 2.6969220404878063858,
    2.6784264018401649278, 2.6599702416101278272, 2.6415535597976950840, 2.6231763564028666982,
    2.6048386314256426699, 2.5865403848660229990, 2.5682816167240076856, 2.5500623269995967296,
    2.5318825156927901310, 2.5137421828035878899, 2.4956413283319900062, 2.4775799522779964799,
    2.4595580546416073111, 2.4415756354228224997, 2.4236326946216420457, 2.4057292322380659492,
    2.3878652482720942101, 2.3700407427237268284, 2.3522557155929638042, 2.3345101668798051374,
    2.3168040965842508280, 2.2991375047063008761, 2.2815103912459552816, 2.2639227562032140445,
    2.2463745995780771649, 2.2288659213705446427, 2.2113967215806164779, 2.1939670002082926706,
    2.1765767572535732207, 2.1592259927164581283, 2.1419147065969473933, 2.1246428988950410157,
    2.1074105696107389955, 2.0902177187440413328, 2.0730643462949480275, 2.0559504522634590797,
    2.0388760366495744893, 2.0218410994532942563, 2.0048456406746183808, 1.9878896603135468627,
    1.9709731583700797020, 1.9540961348442168988, 1.9372585897359584530, 1.9204605230453043646,
    1.9037019347722546336, 1.8869828249168092601, 1.8703031934789682441, 1.8536630404587315854,
    1.8370623658560992843, 1.8205011696710713405, 1.8039794519036477542, 1.7874972125538285253,
    1.7710544516216136538, 1.7546511691070031398, 1.7382873650099969832, 1.7219630393305951840,
    1.7056781920687977423, 1.6894328232246046580, 1.6732269327980159312, 1.6570605207890315618,
    1.6409335871976515498, 1.6248461320238758952, 1.6087981552677045981, 1.5927896569291376584,
    1.5768206370081750762, 1.5608910955048168514, 1.5450010324190629840, 1.5291504477509134741,
    1.5133393415003683216, 1.4975677136674275265, 1.4818355642520910888, 1.4661428932543590086,
    1.4504897006742312859, 1.4348759865117079205, 1.4193017507667889126, 1.4037669934394742622,
    1.3882717145297639691, 1.3728159140376580335, 1.3573995919631564554, 1.3420227483062592346,
    1.3266853830669663714, 1.3113874962452778655, 1.2961290878411937171, 1.2809101578547139261,
    1.2657307062858384925, 1.2505907331345674164, 1.2354902384009006977, 1.2204292220848383365,
    1.2054076841863803326, 1.1904256247055266863, 1.1754830436422773973, 1.1605799409966324658,
    1.1457163167685918917, 1.1308921709581556751, 1.1161075035653238159, 1.1013623145900963141,
    1.0866566040324731697, 1.0719903718924543828, 1.0573636181700399534, 1.0427763428652298813,
    1.0282285459780241667, 1.0137202275084228096, 0.99925138745642580982, 0.98482202582203316752,
    0.97043214260524488265, 0.95608173780606095522, 0.94177081142448138522, 0.92749936346050617266,
    0.91326739391413531753, 0.89907490278536881984, 0.88492189007420667958, 0.87080835578064889675,
    0.85673429990469547136, 0.84269972244634640340, 0.82870462340560169288, 0.81474900278246133980,
    0.80083286057692534414, 0.78695619678899370593, 0.77311901141866642514, 0.75932130446594350179,
    0.74556307593082493588, 0.73184432581331072740, 0.71816505411340087635, 0.70452526083109538274,
    0.69092494596639424656, 0.67736410951929746782, 0.66384275148980504651, 0.65036087187791698264,
    0.63691847068363327620, 0.62351554790695392720, 0.61015210354787893563, 0.59682813760640830149,
    0.58354365008254202479, 0.57029864097628010552, 0.55709311028762254369, 0.54392705801656933930,
    0.53080048416312049233, 0.51771338872727600280, 0.50466577170903587071, 0.49165763310840009605,
    0.47868897292536867882, 0.46575979115994161903, 0.45287008781211891668, 0.44001986288190057176,
    0.42720911636928658427, 0.41443784827427695422, 0.40170605859687168160, 0.38901374733707076641,
    0.37636091449487420866, 0.36374756007028200835, 0.35117368406329416547, 0.33863928647391068002,
    0.32614436730213155201, 0.31368892654795678144, 0.30127296421138636829, 0.28889648029242031258,
    0.27655947479105861431, 0.26426194770730127347, 0.25200389904114829007, 0.23978532879259966410,
    0.22760623696165539556, 0.21546662354831548446, 0.20336648855257993079, 0.19130583197444873456,
    0.17928465381392189576, 0.16730295407099941440, 0.15536073274568129047, 0.14345798983796752398,
    0.13159472534785811492, 0.11977093927535306329, 0.10798663162045236910, 0.096241802383156032345,
    0.084536451563464053023, 0.072870579161376431136, 0.061244185176893166683, 0.049657269610014259664,
    0.038109832460739710080, 0.026601873729069517931, 0.015133393415003683216, 0.0037043915185422059349,
    -0.0076851319603149139112, -0.019035177021567676323, -0.030345743665216081300, -0.041616831891260128843,
    -0.052848441699699818951, -0.064040573090535151625, -0.075193226063766126864, -0.086306400619392744669,
    -0.097380096757415005039, -0.10841431447783290798, -0.11940905378064645348, -0.13036431466585564154,
    -0.14128009713346047218, -0.15215640118346094537, -0.16299322681585706114, -0.17379057403064881947,
    -0.18454844282783622036, -0.19526683320741926382, -0.20594574516939794985, -0.21658517871377227844,
    -0.22718513384054224959, -0.23774561054970786332, -0.24826660884126911960, -0.25874812871522601846,
    -0.26919017017157855988, -0.27959273321032674386, -0.28995581783147057041, -0.30027942403501003953,
    -0.31056355182094515121, -0.32080820118927590545, -0.33101337214000230226, -0.34117906467312434164,
    -0.35130527878864202358, -0.36139201448655534809, -0.37143927176686431517, -0.38144705062956892481,
    -0.39141535107466917701, -0.40134417310216507178, -0.41123351671205660912, -0.42108338190434378902,
    -0.43089376867902661149, -0.44066467703610507652, -0.45039610697557918412, -0.46008805849744893428,
    -0.46974053160171432701, -0.47935352628837536231, -0.48892704255743204017, -0.49846108040888436059,
    -0.50795563984273232358, -0.51741072085897592914, -0.52682632345761517726, -0.53620244763865006795,
    -0.54553909340208060120, -0.55483626074790677702, -0.56409394967612859541, -0.57331216018674605636,
    -0.58249089227975915987, -0.59163014595516790595, -0.60072992121297229460, -0.60979021805317232581,
    -0.61881103647576799959, -0.62779237648075931593, -0.63673423806814627484, -0.64563662123792887632,
    -0.65449952599010712036, -0.66332295232468100696, -0.67210690024165053613, -0.68085136974101570787,
    -0.68955636082277652217, -0.69822187348693297904, -0.70684790773348507847, -0.71543446356243282047,
    -0.72398154097377620503, -0.73248913996751523216, -0.74095726054364990186, -0.74938590270218021412,
    -0.75777506644310616894, -0.76612475176642776633, -0.77443495867214500629, -0.78270568716025788881,
    -0.79093693723076641390, -0.79912870888367058156, -0.80728100211897039177, -0.81539381693666584456,
    -0.82346715333675693991, -0.83150101131924367783, -0.83949539088412605831, -0.84745029203140408135,
    -0.85536571476107774697, -0.86324165907314705514, -0.87107812496761200589, -0.87887511244447259920,
    -0.88663262150372883507, -0.89435065214538071351, -0.90202920436942823452, -0.90966827817587139809,
    -0.91726787356471020422, -0.92482799053594465293, -0.93234862908957474419, -0.93982978922560047803,
    -0.94727147094402185442, -0.95467367424483887339, -0.96203639912805153492, -0.96935964559365983901,
    -0.97664341364166378567, -0.98388770327206337490, -0.99109251448485860669, -0.99825784728004948105,
    -1.0053837016576359980, -1.0124700776176181575, -1.0195169751599959595, -1.0265243942847694041,
    -1.0334923349919384913, -1.0404207972815032211, -1.0473097811534635934, -1.0541592866078196083,
    -1.0609693136445712657, -1.0677398622637185657, -1.0744709324652615083, -1.0811625242492000934,
    -1.0878146376155343212, -1.0944272725642641914, -1.1010004290953897043, -1.1075341072089108597,
    -1.1140283069048276576, -1.1204830281831400982, -1.1268982710438481813, -1.1332740354869519070,
    -1.1396103215124512752, -1.1459071291203462860, -1.1521644583106369394, -1.1583823090833232353,
    -1.1645606814384051738, -1.1706995753758827548, -1.1767989908957559785, -1.1828589279980248447,
    -1.1888793866826893534, -1.1948603669497495047, -1.2008018687992052986, -1.2067038922310567351,
    -1.2125664372453038141, -1.2183895038419465357, -1.2241730920209848998, -1.2299172017824189066,
    -1.2356218331262485558, -1.2412869860524738477, -1.2469126605610947821, -1.2524988566521113591,
    -1.2580455743255235786, -1.2635528135813314407, -1.2690205744195349454, -1.2744488568401340926,
    -1.2798376608431288824, -1.2851869864285193148, -1.2904968335963053898, -1.2957672023464871073,
    -1.3009980926790644673, -1.3061895045940374700, -1.3113414380914061152, -1.3164538931711704029,
    -1.3215268698333303333, -1.3265603680778859061, -1.3315543879048371216, -1.3365089293141839796,
    -1.3414239923059264802, -1.3462995768800646234, -1.3511356830365984091, -1.3559323107755278374,
    -1.3606894600968529082, -1.3654071310005736217, -1.3700853234866899777, -1.3747240375552019762,
    -1.3793232732061096173, -1.3838830304394129010, -1.3884033092551118273, -1.3928841096532063961,
    -1.3973254316336966074, -1.4017272751965824614, -1.4060896403418639579, -1.4104125270695410970,
    -1.4146959353796138786, -1.4189398652720823028, -1.4231443167469463696, -1.4273092898042060789,
    -1.4314347844438614308, -1.4355208006659124253, -1.4395673384703590623, -1.4435743978572013419,
    -1.4475419788264392641, -1.4514700813780728288, -1.4553587055121020361, -1.4592078512285268860,
    -1.4630175185273473784, -1.4667877074085635134, -1.4705184178721752910, -1.4742096499181827111,
    -1.4778614035465857738, -1.4814736787573844790, -1.4850464755505788268, -1.4885797939261688172,
    -1.4920736338841544502, -1.4955279954245357257, -1.4989428785473126438, -1.5023182832524852044,
    -1.5056542095400534076, -1.5089506574100172534, -1.5122076268623767418, -1.5154251178971318727,
    -1.5186031305142826462, -1.5217416647138290622, -1.5248407204957711208, -1.5279002978601088220,
    -1.5309203968068421657, -1.5339010173359711520, -1.5368421594474957809, -1.5397438231414160523,
    -1.5426060084177319663, -1.5454287152764435229, -1.5482119437175507220, -1.5509556937410535637,
    -1.5536599653469520480, -1.5563247585352461748, -1.5589500733059359442, -1.5615359096590213561,
    -1.5640822675945024107, -1.5665891471123791078, -1.5690565482126514474, -1.5714844708953194296,
    -1.5738729151603830544, -1.5762218810078423218, -1.5785313684376972317, -1.5808013774499477842,
    -1.5830319080445939792, -1.5852229602216358168, -1.5873745339810732970, -1.5894866293229064198,
    -1.5915592462471351851, -1.5935923847537595929, -1.5955860448427796434, -1.5975402265141953364,
    -1.5994549297680066720, -1.6013301546042136501, -1.6031659010228162708, -1.6049621690238145341,
    -1.6067189586072084399, -1.6084362697729979883, -1.6101141025211831793, -1.6117524568517640128,
    -1.6133513327647404889, -1.6149107302601126076, -1.6164306493378803688, -1.6179110899980437726,
    -1.6193520522406028189, -1.6207535360655575079, -1.6221155414729078393, -1.6234380684626538134,
    -1.6247211170347954300, -1.6259646871893326892, -1.6271687789262655910, -1.6283333922455941353,
    -1.6294585271473183222, -1.6305441836314381516, -1.6315903616979536236, -1.6325970613468647382,
    -1.6335642825781714953, -1.6344920253918738951, -1.6353802897879719373, -1.6362290757664656222,
    -1.6370383833273549496, -1.6378082124706399195, -1.6385385631963205321, -1.6392294355043967872,
    -1.6398808293948686849, -1.6404927448677362251, -1.6410651819229994079, -1.6415981405606582333,
    -1.6420916207807127012, -1.6425456225831628117, -1.6429601459680085647, -1.6433351909352499604,
    -1.6436707574848869986, -1.6439668456169196793, -1.6442234553313480027, -1.6444405866281719685,
    -1.6446182395073915770, -1.6447564139690068280, -1.6448551100130177216, -1.6449143276394242578,
    -1.6449340668482264365, -1.6449143276394242578, -1.6448551100130177216, -1.6447564139690068280,
    -1.6446182395073915770, -1.6444405866281719685, -1.6442234553313480027, -1.6439668456169196793,
    -1.6436707574848869986, -1.6433351909352499604, -1.6429601459680085647, -1.6425456225831628117,
    -1.6420916207807127012, -1.6415981405606582333, -1.6410651819229994079, -1.6404927448677362251,
    -1.6398808293948686849, -1.6392294355043967872, -1.6385385631963205321, -1.6378082124706399195,
    -1.6370383833273549496, -1.6362290757664656222, -1.6353802897879719373, -1.6344920253918738951,
    -1.6335642825781714953, -1.6325970613468647382, -1.6315903616979536236, -1.6305441836314381516,
    -1.6294585271473183222, -1.6283333922455941353, -1.6271687789262655910, -1.6259646871893326892,
    -1.6247211170347954300, -1.6234380684626538134, -1.6221155414729078393, -1.6207535360655575079,
    -1.6193520522406028189, -1.6179110899980437726, -1.6164306493378803688, -1.6149107302601126076,
    -1.6133513327647404889, -1.6117524568517640128, -1.6101141025211831793, -1.6084362697729979883,
    -1.6067189586072084399, -1.6049621690238145341, -1.6031659010228162708, -1.6013301546042136501,
    -1.5994549297680066720, -1.5975402265141953364, -1.5955860448427796434, -1.5935923847537595929,
    -1.5915592462471351851, -1.5894866293229064198, -1.5873745339810732970, -1.5852229602216358168,
    -1.5830319080445939792, -1.5808013774499477842, -1.5785313684376972317, -1.5762218810078423218,
    -1.5738729151603830544, -1.5714844708953194296, -1.5690565482126514474, -1.5665891471123791078,
    -1.5640822675945024107, -1.5615359096590213561, -1.5589500733059359442, -1.5563247585352461748,
    -1.5536599653469520480, -1.5509556937410535637, -1.5482119437175507220, -1.5454287152764435229,
    -1.5426060084177319663, -1.5397438231414160523, -1.5368421594474957809, -1.5339010173359711520,
    -1.5309203968068421657, -1.5279002978601088220, -1.5248407204957711208, -1.5217416647138290622,
    -1.5186031305142826462, -1.5154251178971318727, -1.5122076268623767418, -1.5089506574100172534,
    -1.5056542095400534076, -1.5023182832524852044, -1.4989428785473126438, -1.4955279954245357257,
    -1.4920736338841544502, -1.4885797939261688172, -1.4850464755505788268, -1.4814736787573844790,
    -1.4778614035465857738, -1.4742096499181827111, -1.4705184178721752910, -1.4667877074085635134,
    -1.4630175185273473784, -1.4592078512285268860, -1.4553587055121020361, -1.4514700813780728288,
    -1.4475419788264392641, -1.4435743978572013419, -1.4395673384703590623, -1.4355208006659124253,
    -1.4314347844438614308, -1.4273092898042060789, -1.4231443167469463696, -1.4189398652720823028,
    -1.4146959353796138786, -1.4104125270695410970, -1.4060896403418639579, -1.4017272751965824614,
    -1.3973254316336966074, -1.3928841096532063961, -1.3884033092551118273, -1.3838830304394129010,
    -1.3793232732061096173, -1.3747240375552019762, -1.3700853234866899777, -1.3654071310005736217,
    -1.3606894600968529082, -1.3559323107755278374, -1.3511356830365984091, -1.3462995768800646234,
    -1.3414239923059264802, -1.3365089293141839796, -1.3315543879048371216, -1.3265603680778859061,
    -1.3215268698333303333, -1.3164538931711704029, -1.3113414380914061152, -1.3061895045940374700,
    -1.3009980926790644673, -1.2957672023464871073, -1.2904968335963053898, -1.2851869864285193148,
    -1.2798376608431288824, -1.2744488568401340926, -1.2690205744195349454, -1.2635528135813314407,
    -1.2580455743255235786, -1.2524988566521113591, -1.2469126605610947821, -1.2412869860524738477,
    -1.2356218331262485558, -1.2299172017824189066, -1.2241730920209848998, -1.2183895038419465357,
    -1.2125664372453038141, -1.2067038922310567351, -1.2008018687992052986, -1.1948603669497495047,
    -1.1888793866826893534, -1.1828589279980248447, -1.1767989908957559785, -1.1706995753758827548,
    -1.1645606814384051738, -1.1583823090833232353, -1.1521644583106369394, -1.1459071291203462860,
    -1.1396103215124512752, -1.1332740354869519070, -1.1268982710438481813, -1.1204830281831400982,
    -1.1140283069048276576, -1.1075341072089108597, -1.1010004290953897043, -1.0944272725642641914,
    -1.0878146376155343212, -1.0811625242492000934, -1.0744709324652615083, -1.0677398622637185657,
    -1.0609693136445712657, -1.0541592866078196083, -1.0473097811534635934, -1.0404207972815032211,
    -1.0334923349919384913, -1.0265243942847694041, -1.0195169751599959595, -1.0124700776176181575,
    -1.0053837016576359980, -0.99825784728004948105, -0.99109251448485860669, -0.98388770327206337490,
    -0.97664341364166378567, -0.96935964559365983901, -0.96203639912805153492, -0.95467367424483887339,
    -0.94727147094402185442, -0.93982978922560047803, -0.93234862908957474419, -0.92482799053594465293,
    -0.91726787356471020422, -0.90966827817587139809, -0.90202920436942823452, -0.89435065214538071351,
    -0.88663262150372883507, -0.87887511244447259920, -0.87107812496761200589, -0.86324165907314705514,
    -0.85536571476107774697, -0.84745029203140408135, -0.83949539088412605831, -0.83150101131924367783,
    -0.82346715333675693991, -0.81539381693666584456, -0.80728100211897039177, -0.79912870888367058156,
    -0.79093693723076641390, -0.78270568716025788881, -0.77443495867214500629, -0.76612475176642776633,
    -0.75777506644310616894, -0.74938590270218021412, -0.74095726054364990186, -0.73248913996751523216,
    -0.72398154097377620503, -0.71543446356243282047, -0.70684790773348507847, -0.69822187348693297904,
    -0.68955636082277652217, -0.68085136974101570787, -0.67210690024165053613, -0.66332295232468100696,
    -0.65449952599010712036, -0.64563662123792887632, -0.63673423806814627484, -0.62779237648075931593,
    -0.61881103647576799959, -0.60979021805317232581, -0.60072992121297229460, -0.59163014595516790595,
    -0.58249089227975915987, -0.57331216018674605636, -0.56409394967612859541, -0.55483626074790677702,
    -0.54553909340208060120, -0.53620244763865006795, -0.52682632345761517726, -0.51741072085897592914,
    -0.50795563984273232358, -0.49846108040888436059, -0.48892704255743204017, -0.47935352628837536231,
    -0.46974053160171432701, -0.46008805849744893428, -0.45039610697557918412, -0.44066467703610507652,
    -0.43089376867902661149, -0.42108338190434378902, -0.41123351671205660912, -0.40134417310216507178,
    -0.39141535107466917701, -0.38144705062956892481, -0.37143927176686431517, -0.36139201448655534809,
    -0.35130527878864202358, -0.34117906467312434164, -0.33101337214000230226, -0.32080820118927590545,
    -0.31056355182094515121, -0.30027942403501003953, -0.28995581783147057041, -0.27959273321032674386,
    -0.26919017017157855988, -0.25874812871522601846, -0.24826660884126911960, -0.23774561054970786332,
    -0.22718513384054224959, -0.21658517871377227844, -0.20594574516939794985, -0.19526683320741926382,
    -0.18454844282783622036, -0.17379057403064881947, -0.16299322681585706114, -0.15215640118346094537,
    -0.14128009713346047218, -0.13036431466585564154, -0.11940905378064645348, -0.10841431447783290798,
    -0.097380096757415005039, -0.086306400619392744669, -0.075193226063766126864, -0.064040573090535151625,
    -0.052848441699699818951, -0.041616831891260128843, -0.030345743665216081300, -0.019035177021567676323,
    -0.0076851319603149139112, 0.0037043915185422059349, 0.015133393415003683216, 0.026601873729069517931,
    0.038109832460739710080, 0.049657269610014259664, 0.061244185176893166683, 0.072870579161376431136,
    0.084536451563464053023, 0.096241802383156032345, 0.10798663162045236910, 0.11977093927535306329,
    0.13159472534785811492, 0.14345798983796752398, 0.15536073274568129047, 0.16730295407099941440,
    0.17928465381392189576, 0.19130583197444873456, 0.20336648855257993079, 0.21546662354831548446,
    0.22760623696165539556, 0.23978532879259966410, 0.25200389904114829007, 0.26426194770730127347,
    0.27655947479105861431, 0.28889648029242031258, 0.30127296421138636829, 0.31368892654795678144,
    0.32614436730213155201, 0.33863928647391068002, 0.35117368406329416547, 0.36374756007028200835,
    0.37636091449487420866, 0.38901374733707076641, 0.40170605859687168160, 0.41443784827427695422,
    0.42720911636928658427, 0.44001986288190057176, 0.45287008781211891668, 0.46575979115994161903,
    0.47868897292536867882, 0.49165763310840009605, 0.50466577170903587071, 0.51771338872727600280,
    0.53080048416312049233, 0.54392705801656933930, 0.55709311028762254369, 0.57029864097628010552,
    0.58354365008254202479, 0.59682813760640830149, 0.61015210354787893563, 0.62351554790695392720,
    0.63691847068363327620, 0.65036087187791698264, 0.66384275148980504651, 0.67736410951929746782,
    0.69092494596639424656, 0.70452526083109538274, 0.71816505411340087635, 0.73184432581331072740,
    0.74556307593082493588, 0.75932130446594350179, 0.77311901141866642514, 0.78695619678899370593,
    0.80083286057692534414, 0.81474900278246133980, 0.82870462340560169288, 0.84269972244634640340,
    0.85673429990469547136, 0.87080835578064889675, 0.88492189007420667958, 0.89907490278536881984,
    0.91326739391413531753, 0.92749936346050617266, 0.94177081142448138522, 0.95608173780606095522,
    0.97043214260524488265, 0.98482202582203316752, 0.99925138745642580982, 1.0137202275084228096,
    1.0282285459780241667, 1.0427763428652298813, 1.0573636181700399534, 1.0719903718924543828,
    1.0866566040324731697, 1.1013623145900963141, 1.1161075035653238159, 1.1308921709581556751,
    1.1457163167685918917, 1.1605799409966324658, 1.1754830436422773973, 1.1904256247055266863,
    1.2054076841863803326, 1.2204292220848383365, 1.2354902384009006977, 1.2505907331345674164,
    1.2657307062858384925, 1.2809101578547139261, 1.2961290878411937171, 1.3113874962452778655,
    1.3266853830669663714, 1.3420227483062592346, 1.3573995919631564554, 1.3728159140376580335,
    1.3882717145297639691, 1.4037669934394742622, 1.4193017507667889126, 1.4348759865117079205,
    1.4504897006742312859, 1.4661428932543590086, 1.4818355642520910888, 1.4975677136674275265,
    1.5133393415003683216, 1.5291504477509134741, 1.5450010324190629840, 1.5608910955048168514,
    1.5768206370081750762, 1.5927896569291376584, 1.6087981552677045981, 1.6248461320238758952,
    1.6409335871976515498, 1.6570605207890315618, 1.6732269327980159312, 1.6894328232246046580,
    1.7056781920687977423, 1.7219630393305951840, 1.7382873650099969832, 1.7546511691070031398,
    1.7710544516216136538, 1.7874972125538285253, 1.8039794519036477542, 1.8205011696710713405,
    1.8370623658560992843, 1.8536630404587315854, 1.8703031934789682441, 1.8869828249168092601,
    1.9037019347722546336, 1.9204605230453043646, 1.9372585897359584530, 1.9540961348442168988,
    1.9709731583700797020, 1.9878896603135468627, 2.0048456406746183808, 2.0218410994532942563,
    2.0388760366495744893, 2.0559504522634590797, 2.0730643462949480275, 2.0902177187440413328,
    2.1074105696107389955, 2.1246428988950410157, 2.1419147065969473933, 2.1592259927164581283,
    2.1765767572535732207, 2.1939670002082926706, 2.2113967215806164779, 2.2288659213705446427,
    2.2463745995780771649, 2.2639227562032140445, 2.2815103912459552816, 2.2991375047063008761,
    2.3168040965842508280, 2.3345101668798051374, 2.3522557155929638042, 2.3700407427237268284,
    2.3878652482720942101, 2.4057292322380659492, 2.4236326946216420457, 2.4415756354228224997,
    2.4595580546416073111, 2.4775799522779964799, 2.4956413283319900062, 2.5137421828035878899,
    2.5318825156927901310, 2.5500623269995967296, 2.5682816167240076856, 2.5865403848660229990,
    2.6048386314256426699, 2.6231763564028666982, 2.6415535597976950840, 2.6599702416101278272,
    2.6784264018401649278, 2.6969220404878063858, 2.7154571575530522013, 2.7340317530359023742,
    2.7526458269363569046, 2.7712993792544157924, 2.7899924099900790376, 2.8087249191433466403,
    2.8274969067142186004, 2.8463083727026949179, 2.8651593171087755929, 2.8840497399324606253,
    2.9029796411737500151, 2.9219490208326437624, 2.9409578789091418671, 2.9600062154032443292,
    2.9790940303149511488, 2.9982213236442623258, 3.0173880953911778602, 3.0365943455556977521,
    3.0558400741378220014, 3.0751252811375506081, 3.0944499665548835723, 3.1138141303898208939,
    3.1332177726423625729, 3.1526608933125086094, 3.1721434924002590033, 3.1916655699056137547,
    3.2112271258285728635, 3.2308281601691363297, 3.2504686729273041533, 3.2701486641030763344,
};

}  // namespace golden
