// (alpha, z, E_alpha(z))
pub const ML_ONE: &[(f64, f64, f64)] = &[
    (0.4, -5.0, 0.12462707110373716186),
    (0.4, -3.0, 0.19625892833053848583),
    (0.4, -2.0, 0.27353529996067953854),
    (0.4, -1.0, 0.44206335968522350534),
    (0.4, -0.5, 0.62349640387529039466),
    (0.4, 0.3, 1.4664360307851949823),
    (0.4, 1.0, 6.1470751100728136056),
    (0.4, 2.0, 715.25950541131936671),
    (0.4, 3.5, 2.2436214876500499962e+10),
    (0.4, 5.0, 4.739577219410740593e+24),
    (0.5, -5.0, 0.11070463773306862637),
    (0.5, -3.0, 0.17900115118138995042),
    (0.5, -2.0, 0.25539567631050574387),
    (0.5, -1.0, 0.42758357615580700441),
    (0.5, -0.5, 0.61569034419292587487),
    (0.5, 0.3, 1.4537492328427655735),
    (0.5, 1.0, 5.0089800807622834663),
    (0.5, 2.0, 108.94090438997797241),
    (0.5, 3.5, 4.1796242244577031413e+5),
    (0.5, 5.0, 1.4400979867466104041e+11),
    (0.6, -5.0, 0.095117846438754616683),
    (0.6, -3.0, 0.15970348026509121615),
    (0.6, -2.0, 0.23557103111182496424),
    (0.6, -1.0, 0.4133273409431062974),
    (0.6, -0.5, 0.60947582195620002044),
    (0.6, 0.3, 1.4367259569857198751),
    (0.6, 1.0, 4.2486350026483743397),
    (0.6, 2.0, 39.692804958505455756),
    (0.6, 3.5, 5.3191453276165319375e+3),
    (0.6, 5.0, 3.7262551002300527311e+6),
    (0.75, -5.0, 0.067923974332643942122),
    (0.75, -3.0, 0.12585513691184152704),
    (0.75, -2.0, 0.20207848341295445435),
    (0.75, -1.0, 0.39310830281575406177),
    (0.75, -0.5, 0.60379034509524675559),
    (0.75, 0.3, 1.4062253628813921239),
    (0.75, 1.0, 3.4858662200517438713),
    (0.75, 2.0, 16.477360564726636035),
    (0.75, 3.5, 270.82903096145436906),
    (0.75, 5.0, 6.8881316797401478446e+3),
    (0.9, -5.0, 0.034431324804098423905),
    (0.9, -3.0, 0.08388835403377326904),
    (0.9, -2.0, 0.16352830001693004885),
    (0.9, -1.0, 0.37606602142464188118),
    (0.9, -0.5, 0.60340549869586096762),
    (0.9, 0.3, 1.3727385680911127423),
    (0.9, 1.0, 2.9749390749704474465),
    (0.9, 2.0, 9.6049277845715013047),
    (0.9, 3.5, 62.037718408834202551),
    (0.9, 5.0, 438.95181466448276021),
    (1.0, -5.0, 6.7379469990854670966e-3),
    (1.0, -3.0, 0.049787068367863942979),
    (1.0, -2.0, 0.13533528323661269189),
    (1.0, -1.0, 0.3678794411714423216),
    (1.0, -0.5, 0.6065306597126334236),
    (1.0, 0.3, 1.349858807576003104),
    (1.0, 1.0, 2.7182818284590452354),
    (1.0, 2.0, 7.3890560989306502272),
    (1.0, 3.5, 33.115451958692313751),
    (1.0, 5.0, 148.41315910257660342),
    (1.5, -5.0, -0.3000820504131308808),
    (1.5, -3.0, -0.17556537379997824292),
    (1.5, -2.0, 0.029430685602826471728),
    (1.5, -1.0, 0.39662936531808808449),
    (1.5, -0.5, 0.66323679487242795678),
    (1.5, 0.3, 1.2412030890688286495),
    (1.5, 1.0, 1.9394872614337489665),
    (1.5, 2.0, 3.3487008963183954036),
    (1.5, 3.5, 6.7451719782328336152),
    (1.5, 5.0, 12.457289126443951234),
    (2.0, -5.0, -0.61727287645716659406),
    (2.0, -3.0, -0.1605565385746906274),
    (2.0, -2.0, 0.15594369476537447345),
    (2.0, -1.0, 0.5403023058681397174),
    (2.0, -0.5, 0.76024459707563015125),
    (2.0, 0.3, 1.1537877015640244274),
    (2.0, 1.0, 1.5430806348152437785),
    (2.0, 2.0, 2.178183556608570864),
    (2.0, 3.5, 3.323835714772931183),
    (2.0, 5.0, 4.7316734711307665526),
];
// (alpha, beta, z, E_{alpha,beta}(z))
pub const ML_TWO: &[(f64, f64, f64, f64)] = &[
    (0.5, 0.0, 0.25, 0.22596254401848420394),
    (0.5, 0.0, -1.5, -0.12271718829942005012),
    (0.7, 1.3, 2.0, 15.359478534709174032),
    (1.2, 0.5, -2.0, -0.2935284832884288491),
    (0.3, 2.0, 0.8, 2.8018745525964366473),
];
// (alpha, beta, gamma, z, E^gamma_{alpha,beta}(z))
pub const ML_THREE: &[(f64, f64, f64, f64, f64)] = &[
    (0.7, 1.0, -2.0, 0.3, 0.41212544584204520769),
    (0.6, 1.48, 0.8, -0.6597539553864471, 0.77055045077063010235),
    (0.5, 1.2, 2.5, 1.1, 33.199823055309345433),
    (0.9, 0.7, -0.4, -1.3, 1.2363150198422064161),
];
// (alpha, mu, z, W_{alpha,mu}(z))
pub const WRIGHT: &[(f64, f64, f64, f64)] = &[
    (1.0, 1.0, 1.0, 2.2795853023360672674),
    (0.5, 1.0, -1.0, 0.26478660052626588013),
    (0.3, 0.5, 2.0, 6.9855559546991803305),
    (0.8, 1.6, -3.0, -0.029364966483867797308),
    (0.5, 0.0, 0.7, 0.7155830092209842557),
];
