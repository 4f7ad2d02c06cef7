// (x, Ai, Ai', Bi, Bi') reference values, 19 significant digits so the
// table stays authoritative past double precision.
#[allow(clippy::excessive_precision)]
pub const AIRY_REFERENCE: [(f64, f64, f64, f64, f64); 40] = [
    (-200.0, 0.1488939424838102512, -0.2600066454334060228, 0.01839840634261779334, 2.105701367289785444),
    (-150.5, 0.02482255551365513124, -1.952455700069595335, 0.1591556609902918082, 0.3047836344162644274),
    (-100.0, 0.1767533932395528781, -0.2422970316605838054, 0.02427388768016013161, 1.767594893234060932),
    (-50.0, -0.1618814236123209239, 0.9689898372767490871, -0.1371501521288200734, -1.1453617002654776),
    (-35.2, 0.2264997330557726475, 0.2891470098364169639, -0.04846441070821674777, 1.343474195923651085),
    (-20.0, -0.1764061270779846896, 0.8928628567364712384, -0.2001393093226513493, -0.7914290338395364794),
    (-15.75, -0.2829424293181293731, -0.05259745931251725503, 0.01212143736814216404, -1.122745465007060772),
    (-12.0, -0.06655517505437312947, 1.02311045336797073, -0.2957199120780730567, -0.2367321978311233163),
    (-9.5, 0.3191032477191282014, -0.108095318811871239, 0.03778543248946650227, 0.9847140700021197039),
    (-9.0, -0.02213372154734140367, -0.9756639809263315947, 0.3249473234552449179, -0.05740051384366925439),
    (-8.25, -0.2545363209965606466, 0.6085182968874138998, -0.2144805251492360451, -0.7377908251726359),
    (-7.0, 0.1842808352505056373, -0.7710081684101265477, 0.2937620718544140201, 0.4982445900581134887),
    (-6.1, -0.3535116761209648255, 0.1383639372527176146, -0.06182254819628120153, -0.876225301532515345),
    (-5.2, 0.252580338104744621, 0.6399051669012840767, -0.2750270441896408741, 0.5634589795751734233),
    (-4.5, 0.2921527810559594669, -0.5233625323157477007, 0.2538726576969326368, 0.6347447677736637097),
    (-4.2, 0.08921076323945071796, -0.7822156078624518974, 0.3834673612709446253, 0.20575691122112291),
    (-3.5, -0.3755338231404319119, -0.3434434334540481463, 0.1689398374810586118, -0.6931162849072888018),
    (-2.338107410459767, 2.743319340666283e-17, 0.7012108227206913625, -0.4539432020583357854, -0.04598212182185804238),
    (-1.5, 0.4642565777488694065, 0.3091869672024104204, -0.19178486115704122, 0.5579081030218973541),
    (-1.0, 0.5355608832923521188, -0.0101605671166452094, 0.1039973894969446119, 0.5923756264227923508),
    (-0.5, 0.4757280916105395888, -0.2040816703395473861, 0.3803526597510538502, 0.5059337136238471666),
    (0.0, 0.3550280538878172393, -0.2588194037928067984, 0.6149266274460007352, 0.4482883573538263579),
    (0.3, 0.2788064819550049247, -0.2451463642190548044, 0.7524855850873156327, 0.4800490287524480197),
    (1.0, 0.1352924163128814155, -0.1591474412967932128, 1.207423594952871259, 0.932435933392775633),
    (1.7, 0.05432479273291947119, -0.07737488952532503218, 2.319407506938924834, 2.555849356900437841),
    (2.5, 0.01572592338047049, -0.02625088103590323036, 6.481660738460578608, 9.421423317334301756),
    (3.0, 0.006591139357460719144, -0.01191297670595131847, 14.03732896373023203, 22.92221496638217019),
    (3.2, 0.004567439274039819388, -0.008495817218568593311, 19.58697573344119103, 33.2576989805451101),
    (4.0, 0.0009515638512048018736, -0.0019586409502041789, 83.84707140846813992, 161.9266835046134018),
    (4.5, 0.0003302503235143089837, -0.0007178665675575088887, 227.5880818355997185, 469.135077327966398),
    (5.0, 0.0001083444281360744173, -0.000247413890868462476, 657.7920441711711824, 1435.819080217982519),
    (6.8, 1.275879416876668748e-6, -3.372464775376393394e-6, 47860.1855742919604, 122976.4303084454172),
    (8.0, 4.692207616099231626e-8, -1.341439297906786574e-7, 1199586.004124459931, 3354342.312744538877),
    (9.0, 2.471168430872489843e-9, -7.480641389658946413e-9, 21472868.89143534909, 63807489.78090821385),
    (9.5, 5.330263704617491627e-10, -1.656639459374066626e-9, 96892265.58045109283, 296034763.8680050387),
    (12.0, 1.393184688875360839e-13, -4.854736554985308463e-13, 329807225829.0741762, 1135507502443.370742),
    (15.7, 1.378816228734709145e-19, -5.485054855077186315e-19, 291327491975169094.3, 1149646743726452183.0),
    (20.0, 1.691672868670540314e-27, -7.586391625748354961e-27, 2.103765049651103814e+25, 9.381839336133964349e+25),
    (25.0, 8.116026824691386684e-38, -4.066089337243281005e-37, 3.922030778041381774e+35, 1.957073508323330897e+36),
    (30.0, 3.208217591550495571e-49, -1.759876581432725982e-48, 9.057288512151306952e+46, 4.953304512891299042e+47),
];
