// Chebyshev tables for Airy functions.
// Negative patch on [-9, -4.5] (unscaled); positive patch on [3, 9]
// for exponentially scaled Ai: sAi = 2 sqrt(pi) x^(1/4) e^zeta Ai(x),
// sAip = -2 sqrt(pi) x^(-1/4) e^zeta Ai'(x), zeta = (2/3) x^(3/2).

pub(super) const CHEB_NEG_AI: [f64; 32] = [
    0.03161202681581599, 0.2134255873646357, 0.07536889124406851,
    0.11603787468570498, 0.03152820647154281, -0.24278484894875602,
    0.005658705026942361, 0.08174232848660686, -0.011936271736062182,
    -0.012144507202058593, 0.003141628819728045, 0.0008877816949803481,
    -0.0003904168681024565, -1.897945731357965e-05, 2.7912316478914933e-05,
    -2.209358088476161e-06, -1.175526751941735e-06, 2.351226256194853e-07,
    2.2809873370535423e-08, -1.1403045305949023e-08, 4.247400608742409e-10,
    3.2064955003164275e-10, -4.5523345044854974e-11, -4.242051052016807e-12,
    1.5895029260672077e-12, -5.2528616339784664e-14, -3.0869992917704087e-14,
    4.016166025767939e-15, 2.484281227350413e-16, -9.882108808087975e-17,
    4.367197594475733e-18, 1.305402850571114e-18,
];

pub(super) const CHEB_NEG_AIP: [f64; 32] = [
    -0.07999990504190584, 0.21548118447871156, -0.3497114432968212,
    0.08149204448925644, -0.6591457757920345, -0.03060824518734022,
    0.4198979973135478, -0.060788005331032804, -0.08872093549200595,
    0.02409214923652048, 0.008435122124462794, -0.0038334402721732527,
    -0.0002454100042339445, 0.00033100632091961695, -2.609183083257969e-05,
    -1.6346950817991116e-05, 3.3662770137691214e-06, 3.716518762913385e-07,
    -1.8668710670310108e-07, 6.6939023627717205e-09, 5.897658464037973e-09,
    -8.570320527703408e-10, -8.77998032193583e-11, 3.320225032904536e-11,
    -1.0734261559035717e-12, -7.071454270550723e-13, 9.387642942497648e-14,
    6.294409265199889e-15, -2.511555193454079e-15, 1.1130932157219394e-16,
    3.5832854853043415e-17, -5.149280947158937e-18,
];

pub(super) const CHEB_NEG_BI: [f64; 32] = [
    0.02713524961220501, -0.06397459043182632, 0.1334715500223396,
    0.0032776634810766743, 0.2571609364974776, 0.016747589057841503,
    -0.1593309750605663, 0.014216194695722764, 0.03441046475704757,
    -0.006893694022637207, -0.003608458668474304, 0.0011948805732016911,
    0.00016967511233399661, -0.00011133641158593435, 2.3265825097468186e-06,
    6.147460269669719e-06, -8.318731174532317e-07, -1.8854656459430265e-07,
    5.560175008711312e-08, 1.0947791372751694e-09, -2.0495186163257343e-09,
    1.7953997218330978e-10, 4.2295166085346415e-11, -9.208686273370745e-12,
    -1.7517902791503866e-13, 2.3848767934377667e-13, -1.883072971652469e-14,
    -3.3009981736513852e-15, 6.827697721024783e-16, 6.164814118735718e-19,
    -1.2345181573168103e-17, 1.0765956125261817e-18,
];

pub(super) const CHEB_NEG_BIP: [f64; 32] = [
    0.03504524706631131, 0.5163168456382599, 0.12695679673869045,
    0.2790340900429895, 0.11821636078915267, -0.6353159063924865,
    0.043782631643190434, 0.21444929393053372, -0.04467369090797343,
    -0.030247344341804556, 0.010475861273124224, 0.0018278438224114785,
    -0.0012074154426256433, 1.7975957515514817e-05, 7.913864681182033e-05,
    -1.0977069272445592e-05, -2.8274901171092563e-06, 8.540150646670363e-07,
    2.1657970093539445e-08, -3.5612936726773554e-08, 3.168366886225473e-09,
    8.229497856839412e-10, -1.830459278629759e-10, -4.155684429499879e-12,
    5.220547059270413e-12, -4.185318339790542e-13, -7.917914836906759e-14,
    1.666725280284974e-14, 4.4807798565664385e-17, -3.261281917008303e-16,
    2.891627772625676e-17, 3.076650250319164e-18,
];

pub(super) const CHEB_POS_SAI: [f64; 29] = [
    0.9914514168752163, 0.006315928094185277, -0.001959288455333462,
    0.0005661960120293477, -0.00015734883819893666, 4.2658713502366094e-05,
    -1.1371137390852982e-05, 2.994703755104033e-06, -7.817424812858685e-07,
    2.027346921343687e-07, -5.232135219600699e-08, 1.3454592608076417e-08,
    -3.4508878677605513e-09, 8.83476403360829e-10, -2.2590590932897072e-10,
    5.772167465793548e-11, -1.4743347378893914e-11, 3.765580359227581e-12,
    -9.619478010549137e-13, 2.4583149679485716e-13, -6.285710430159354e-14,
    1.6082424641231107e-14, -4.117810080248294e-15, 1.0551790036876572e-15,
    -2.7061406058340606e-16, 6.94627188417513e-17, -1.7845879041981576e-17,
    4.588937843800256e-18, -1.1810666827049225e-18,
];

pub(super) const CHEB_POS_SAIP: [f64; 29] = [
    1.0121220262349444, -0.009037664034466923, 0.0028343074890073375,
    -0.0008291473949242509, 0.00023352322764036483, -6.422283716361332e-05,
    1.7380262207345673e-05, -4.650309903347831e-06, 1.2340321061843793e-06,
    -3.2549342247722367e-07, 8.547153910730288e-08, -2.2370794563172288e-08,
    5.841376209829676e-09, -1.5227399580378226e-09, 3.9650457650286856e-10,
    -1.0317292197431975e-10, 2.683620774587635e-11, -6.979520345058143e-12,
    1.8153696762151434e-12, -4.722867407811497e-13, 1.2291300166399254e-13,
    -3.200212614383235e-14, 8.33635525354724e-15, -2.172748036710037e-15,
    5.666192362602456e-16, -1.4785296954006708e-16, 3.860376132926339e-17,
    -1.0085350451122116e-17, 2.6364088581995124e-18,
];

