@problemName Chinatown
@timeStamps false
@missing false
@univariate true
@equalLength true
@seriesLength 24
@classLabel true 1 2
@data
573,375,301,212,55,34,25,33,113,143,303,615,1226,1281,1221,1081,866,1096,1039,975,746,581,409,182:1
394,264,140,144,104,28,28,25,70,153,401,649,1216,1399,1249,1240,1109,1137,1290,1137,791,638,597,316:1
603,348,176,177,47,30,40,42,101,180,401,777,1344,1573,1408,1243,1141,1178,1256,1114,814,635,304,168:1
428,309,199,117,82,43,24,64,152,183,408,797,1288,1491,1523,1460,1365,1520,1700,1797,1596,1139,910,640:1
372,310,203,133,65,39,27,36,107,139,329,651,990,1027,1041,971,1104,844,1023,1019,862,643,591,452:1
448,344,183,146,71,14,30,41,108,137,277,576,1010,1271,1264,1062,1093,1030,1069,1151,898,754,467,362:1
621,322,221,150,65,40,42,84,148,190,341,685,1162,1391,1367,1279,1318,1336,1440,1479,1417,1347,1003,803:1
597,409,142,93,48,30,34,87,132,157,389,1024,1648,1768,1703,1706,1520,1562,1608,1766,1533,1441,1252,964:1
525,431,248,240,91,64,29,117,200,236,456,717,1331,1609,1563,1398,1465,1459,1631,1891,1847,1731,1375,1188:1
587,382,165,192,130,44,21,35,73,132,299,639,1110,1320,1208,1069,1070,1164,1547,1575,1503,1139,1066,776:1
144,73,21,16,10,12,26,100,177,220,371,599,1280,1346,1461,1367,1319,1205,1250,1269,981,806,550,320:2
141,63,51,14,16,14,28,103,172,205,442,601,1165,1228,912,872,847,1227,1561,1611,1386,1007,810,680:2
67,67,107,14,11,19,18,75,185,223,298,571,1044,1107,872,765,824,1032,1237,1084,759,543,377,168:2
69,54,35,6,7,15,19,76,212,238,364,717,1223,1166,994,931,929,1093,1275,1161,1083,726,441,241:2
142,104,55,33,51,13,36,77,185,222,437,739,1326,1372,979,942,1019,1250,1663,1781,1513,1188,1000,638:2
256,171,104,67,51,26,25,41,170,192,334,801,1341,1468,1395,1221,1168,1284,1400,1321,1099,791,498,272:2
130,68,52,23,10,16,28,128,226,271,402,652,1282,1353,1084,1124,920,1063,1160,1184,893,720,541,304:2
78,60,51,17,10,12,22,73,172,186,318,414,1003,1153,981,846,872,1051,1200,1276,1004,841,525,315:2
95,63,45,26,3,23,28,108,209,241,372,549,1206,1223,1156,1102,1083,1107,1109,1193,900,660,442,226:2
82,93,51,28,39,17,30,138,225,261,358,621,1074,1176,914,858,830,928,954,871,730,506,262,150:2
