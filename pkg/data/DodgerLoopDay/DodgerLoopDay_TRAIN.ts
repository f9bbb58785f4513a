@problemName DodgerLoopDay
@timeStamps false
@missing true
@univariate true
@equalLength true
@seriesLength 288
@classLabel true 1 2 3 4 5 6 7
@data
12,18,11,11,19,17,4,6,8,12,11,6,10,10,9,5,5,8,10,1,6,9,11,5,12,7,10,10,5,10,11,10,12,4,6,8,6,9,4,4,8,7,4,1,2,7,4,7,3,5,1,4,9,4,2,3,3,1,1,1,3,5,3,6,2,4,7,4,4,3,1,4,3,1,6,3,4,5,6,9,8,3,2,6,10,8,7,8,9,0,13,6,6,14,10,14,10,10,9,11,12,8,14,11,11,18,20,18,24,17,10,11,12,20,21,21,20,18,31,17,19,24,20,19,19,19,18,15,19,19,18,24,18,13,23,23,23,20,9,32,45,29,24,21,18,20,28,24,15,25,16,38,25,25,21,20,28,23,19,19,23,14,32,27,29,30,33,20,37,26,42,35,33,23,24,36,28,26,28,27,30,13,24,33,22,22,29,29,36,24,24,19,24,26,22,21,18,42,25,26,31,29,21,22,29,26,13,20,34,18,28,22,33,14,32,25,27,29,24,21,31,25,23,30,30,28,17,32,17,21,21,23,15,21,20,19,26,23,23,18,20,20,23,21,14,18,26,21,22,26,12,16,20,16,15,19,14,14,15,19,13,17,17,18,12,13,14,14,13,7,10,11,12,13,11,7,16,9,10,9,11,8,4,7,3,6,3,6:1
12,9,11,7,12,14,10,10,10,6,10,14,12,18,12,13,13,10,11,9,6,9,9,13,18,8,7,10,13,10,10,10,7,13,6,7,7,7,15,7,9,5,9,8,4,1,5,7,8,1,4,6,3,3,11,9,9,4,3,6,1,1,4,4,3,3,4,1,5,5,3,6,5,2,9,5,6,1,7,7,6,7,3,8,9,5,8,6,8,7,5,8,4,12,7,7,10,17,22,7,9,9,20,10,9,8,18,11,12,11,13,24,8,14,6,22,21,20,14,20,21,24,24,20,17,17,17,16,26,32,14,14,22,10,12,22,20,20,27,30,34,25,27,21,21,30,18,20,19,7,21,13,30,22,28,18,21,19,19,27,26,25,19,29,18,30,25,20,24,17,24,31,29,26,29,22,37,17,28,26,23,35,32,21,23,25,11,29,21,24,29,24,24,14,23,25,22,23,16,22,25,20,12,14,23,20,21,26,21,14,30,20,20,32,33,20,17,31,23,24,26,24,22,29,34,18,17,21,23,15,19,24,20,22,20,26,19,20,14,18,21,20,21,16,22,16,26,17,15,20,13,19,17,21,6,21,17,21,14,24,18,12,11,11,16,11,15,25,10,16,11,12,7,5,12,14,8,3,4,7,9,11,6,9,7,10,4,9:1
8,5,10,11,9,10,7,18,11,8,8,8,6,3,7,9,8,7,9,7,4,9,6,5,13,5,11,7,7,8,8,7,3,3,4,11,6,3,5,4,6,7,0,4,2,2,4,4,4,2,3,2,3,4,1,7,4,6,4,2,5,4,2,1,2,3,4,3,4,3,4,6,5,3,6,4,3,6,4,4,5,6,6,7,6,4,6,7,7,6,4,12,7,9,5,9,6,11,17,9,12,7,18,15,15,10,13,17,16,14,14,16,16,20,9,26,17,16,16,22,23,16,13,21,23,22,28,31,21,16,22,25,25,15,27,27,24,22,24,21,23,32,18,30,27,30,31,33,36,21,37,18,19,18,21,29,23,17,24,21,33,27,33,26,29,26,32,32,22,34,38,33,29,42,41,30,19,31,28,24,23,22,19,32,28,23,22,16,30,16,24,22,20,25,22,16,27,26,22,27,33,29,23,24,15,33,23,21,23,23,24,31,33,30,35,24,17,27,33,28,21,25,20,22,32,25,21,26,20,21,24,27,29,26,22,27,24,14,21,16,16,20,25,15,19,17,18,23,24,22,23,15,24,17,9,13,15,17,13,16,17,20,14,21,16,21,19,8,8,23,9,12,9,10,11,6,6,11,13,7,6,7,1,2,6,7,8,6:1
16,15,13,14,8,16,14,9,9,8,9,9,10,14,8,6,8,13,5,4,10,8,9,6,11,7,12,5,11,3,8,2,7,2,7,6,6,6,1,3,6,3,6,3,0,8,6,7,5,2,1,2,2,2,4,1,7,1,6,4,4,3,3,4,8,3,4,4,4,3,3,3,5,8,6,7,4,8,6,9,5,7,6,15,6,4,9,6,17,9,10,9,7,17,9,8,9,16,17,9,8,15,15,11,18,15,28,19,15,18,19,24,14,22,13,20,30,24,28,20,34,24,28,23,25,25,26,22,29,22,20,25,24,27,24,20,20,26,27,16,22,26,33,19,19,24,21,34,11,37,22,27,28,25,20,30,27,25,30,35,44,20,37,28,19,30,37,33,41,32,37,30,27,17,38,33,33,26,20,32,32,36,30,33,37,34,61,48,52,58,55,57,59,57,46,53,51,57,47,54,47,50,49,49,48,44,47,32,31,22,20,31,26,19,27,26,30,16,28,20,34,25,26,16,22,20,19,25,25,20,28,22,20,19,18,13,21,16,14,17,26,15,10,24,15,10,13,14,7,12,17,17,11,13,13,10,18,15,21,22,27,12,14,13,15,3,8,17,15,8,12,9,9,13,5,10,10,11,12,11,6,3,11,9,2,6,6,3:1
8,6,5,11,7,4,10,8,8,4,7,3,3,9,4,2,9,6,4,4,4,7,7,6,4,12,4,10,6,5,12,4,5,6,6,2,3,1,8,2,8,3,2,4,4,4,5,0,3,1,0,5,2,2,3,6,5,1,2,2,4,2,3,4,3,3,4,2,2,2,6,3,3,2,7,5,8,3,4,10,6,10,5,7,4,6,6,9,8,2,5,9,5,8,9,4,4,9,12,7,11,20,13,10,17,12,8,15,10,13,13,12,14,11,16,10,11,16,17,16,16,16,17,17,25,23,22,24,17,15,12,24,12,13,12,14,10,25,12,21,37,32,30,23,30,18,22,31,17,19,19,26,22,24,12,21,29,23,21,30,26,15,28,14,26,25,32,17,20,21,23,27,29,16,30,16,27,22,21,25,14,22,17,19,28,32,26,18,25,24,33,18,22,23,22,29,16,27,14,19,24,26,26,24,15,18,20,27,15,11,19,21,19,14,14,28,19,16,19,21,21,13,18,23,18,13,18,16,12,17,22,16,10,24,14,22,22,22,16,24,15,13,23,14,14,18,24,22,23,24,14,22,17,21,18,13,13,16,29,15,13,15,25,9,22,12,16,11,16,26,21,24,20,16,13,16,11,13,19,13,15,17,10,8,12,16,15,13:1
12,16,17,9,13,7,17,4,6,10,7,14,10,13,7,9,7,10,3,7,12,12,9,9,5,7,10,8,9,5,7,5,5,8,9,4,4,3,3,2,5,4,4,6,6,4,5,6,5,4,2,3,3,1,0,4,3,3,4,0,4,3,7,3,4,6,3,2,5,10,7,4,4,6,3,1,6,4,9,8,7,6,8,11,7,4,5,6,8,4,4,4,9,13,13,8,15,11,19,17,15,11,16,12,26,17,11,18,13,14,15,12,15,16,17,17,20,14,19,16,14,13,24,18,16,26,22,20,21,25,23,24,23,20,27,29,26,17,26,39,33,36,36,27,33,30,19,24,28,18,27,19,8,20,19,30,24,31,23,32,24,25,31,30,32,28,23,30,27,30,31,34,23,38,26,24,32,24,30,33,23,26,26,36,23,21,28,23,24,29,36,37,27,30,26,35,32,23,42,27,26,22,30,31,20,23,33,25,33,33,26,28,26,32,28,29,16,34,25,27,30,20,38,37,32,19,16,24,40,26,31,25,25,21,13,26,13,20,26,22,23,17,13,12,21,12,10,19,17,17,14,18,14,15,8,21,19,7,8,10,7,16,17,11,16,8,15,11,12,9,10,13,14,9,7,3,6,5,4,8,8,10,17,4,6,3,4,6:1
13,14,18,11,11,13,13,2,8,10,5,13,3,5,3,8,2,3,3,9,8,3,4,4,8,12,11,7,10,11,4,1,2,5,4,9,4,2,3,4,6,3,4,3,5,3,6,8,4,2,3,3,5,4,2,4,7,3,1,5,3,3,1,0,4,2,5,2,5,5,10,3,6,4,2,7,3,9,9,3,8,4,3,3,9,6,10,2,4,10,7,11,18,13,8,8,8,18,8,12,12,13,16,19,14,11,16,17,9,5,21,18,6,8,18,19,15,16,19,16,17,19,14,19,24,17,20,18,15,20,20,14,22,17,24,18,14,30,23,24,21,26,32,24,21,29,22,23,25,24,21,26,28,22,19,23,25,32,28,23,33,13,28,33,30,21,27,31,34,28,29,17,17,18,26,31,25,32,26,22,23,25,20,22,22,27,28,21,35,21,29,22,23,20,34,40,23,30,22,32,30,22,30,30,30,32,39,29,20,27,33,25,24,24,32,36,38,27,19,29,27,21,20,24,26,10,20,21,35,24,15,17,19,19,15,18,16,21,15,28,18,17,18,19,8,9,17,21,11,14,18,18,23,19,28,20,15,13,22,20,19,7,12,19,9,11,13,6,10,19,20,8,10,11,14,20,18,14,4,11,9,1,0,0,0,1,0,0:1
18,13,10,16,16,12,9,15,13,7,9,17,10,10,9,9,8,13,8,10,9,10,3,12,5,10,8,9,8,5,10,7,11,10,7,3,4,3,4,7,3,3,3,5,5,6,2,5,4,3,7,3,4,4,2,2,4,7,1,3,3,5,2,3,2,4,3,3,3,5,4,5,7,2,4,6,4,5,4,10,4,4,5,2,4,6,9,6,2,12,11,5,9,11,2,13,9,16,4,4,11,14,9,7,19,14,12,23,13,15,6,14,11,10,16,19,18,16,27,22,17,16,19,14,25,28,32,23,33,22,18,27,13,19,21,16,24,28,22,34,26,34,22,25,19,25,23,24,23,26,24,26,29,27,20,27,25,19,20,18,17,26,23,31,24,30,24,32,48,37,23,28,22,37,16,24,24,37,33,19,31,35,25,37,26,38,33,31,46,42,58,53,46,48,47,54,50,49,58,46,50,51,40,51,46,41,32,20,24,22,35,31,38,28,31,27,36,27,24,26,29,23,33,35,21,26,30,29,25,29,24,27,19,18,30,27,17,17,14,14,18,30,23,15,25,18,23,20,27,17,17,16,13,33,16,19,10,14,14,26,14,12,9,19,12,20,15,22,14,8,10,12,13,18,11,19,9,7,11,12,3,7,4,6,5,2,1,10:1
19,13,9,14,14,13,4,10,9,7,9,6,8,3,4,3,7,7,4,6,8,9,5,7,7,9,3,9,9,2,4,7,4,11,10,1,9,5,7,13,11,8,13,17,9,5,7,3,6,4,3,1,5,2,4,1,2,2,4,4,4,3,4,2,2,3,0,0,3,1,7,6,6,1,2,5,9,8,6,6,9,8,5,9,3,7,5,4,7,9,7,6,10,7,10,14,7,10,13,13,11,9,11,14,13,11,15,16,15,27,23,12,20,23,10,12,18,28,11,21,11,18,12,12,21,22,28,24,20,25,23,19,21,27,15,21,27,19,33,15,23,24,26,18,14,20,24,14,21,15,25,15,26,14,15,20,15,12,38,28,21,23,21,25,24,28,23,21,30,26,20,36,29,34,37,38,28,29,21,25,25,22,16,34,20,30,18,32,27,23,17,29,25,30,18,29,39,29,28,25,16,19,16,20,14,25,24,26,28,29,31,17,27,21,21,28,26,22,29,29,20,21,13,27,26,29,18,18,24,17,21,16,18,27,29,21,19,14,18,18,22,16,12,17,14,16,16,23,19,11,9,19,17,9,12,16,14,20,16,10,9,17,13,9,17,17,18,18,8,12,8,15,5,5,13,16,10,6,7,6,6,4,8,5,6,9,3,4:1
24,17,16,11,11,10,11,12,7,7,5,7,3,11,8,6,10,9,8,3,8,8,11,8,6,2,12,11,11,3,1,7,7,9,4,3,9,9,6,4,4,8,2,7,5,4,3,1,5,6,1,2,6,4,3,3,3,2,3,1,4,3,2,3,5,4,2,2,6,8,3,6,2,3,3,7,6,7,1,11,10,4,6,5,3,7,9,5,6,10,17,13,12,12,19,19,10,14,11,10,8,13,13,17,14,16,21,11,18,18,12,21,19,17,16,20,13,22,33,21,24,25,16,20,30,28,22,24,22,21,19,26,21,29,26,21,23,33,27,34,38,29,33,42,20,27,29,27,24,19,25,25,21,40,19,17,21,15,23,24,30,34,27,29,23,22,25,27,40,27,32,23,33,30,29,24,24,26,26,23,37,38,37,38,36,27,29,28,24,34,33,21,24,18,26,13,23,22,27,32,28,17,21,26,33,28,28,29,31,27,31,22,25,33,26,20,23,33,29,28,18,32,16,23,14,30,24,39,28,36,30,21,30,30,22,26,27,21,27,25,23,19,22,21,19,15,25,27,24,17,22,26,18,14,15,17,14,21,19,17,20,16,21,17,14,14,17,11,16,12,16,13,13,10,9,11,8,9,13,11,10,10,13,5,9,9,8,10:1
9,8,13,5,11,11,15,13,5,16,11,13,14,11,8,6,10,4,14,7,9,9,13,5,15,5,8,7,9,5,4,7,10,7,5,4,7,5,3,3,5,3,5,9,6,4,2,5,12,2,7,12,5,12,6,7,3,7,5,4,5,5,7,4,3,3,4,12,10,11,14,7,10,7,13,10,7,6,11,13,18,11,13,15,17,12,12,17,15,16,18,21,19,13,20,14,17,20,9,10,9,9,15,18,19,20,10,15,16,15,15,8,15,15,15,19,21,27,21,16,28,21,25,21,27,20,23,10,24,19,18,25,20,19,24,16,25,23,29,25,33,41,28,20,21,23,20,24,27,36,19,26,20,21,24,28,24,19,22,23,28,28,31,30,21,25,37,22,22,24,17,32,28,30,38,31,36,36,31,42,43,35,40,35,31,25,36,43,43,44,43,44,47,49,46,53,52,45,52,51,51,50,50,43,49,48,51,29,36,24,30,34,22,34,18,20,22,24,24,30,23,22,28,21,24,23,24,20,25,22,25,28,26,16,20,17,26,20,18,20,20,22,21,14,24,26,20,18,20,13,19,12,8,9,10,15,13,20,16,14,10,15,12,17,16,20,19,13,15,10,10,9,14,7,13,8,11,15,7,7,8,7,10,5,9,3,7,7:1
18,13,7,9,11,11,8,9,11,8,6,11,11,7,11,5,10,10,7,9,9,7,8,6,6,5,13,11,11,10,11,4,1,6,9,11,5,3,4,3,6,4,3,2,5,4,0,0,2,4,4,5,2,1,0,5,1,2,2,2,3,3,1,5,2,3,1,1,5,6,4,4,6,5,5,7,3,13,4,7,12,7,2,7,6,3,9,8,6,7,16,5,9,11,9,9,6,9,3,10,12,10,11,20,13,12,26,9,19,16,9,11,12,15,16,10,20,24,16,15,15,24,11,11,20,21,29,23,17,30,29,17,24,25,31,21,34,27,27,32,23,20,28,23,37,22,28,30,26,14,20,19,23,12,24,29,17,14,30,24,19,16,29,21,24,28,24,19,24,42,34,23,21,20,26,22,21,21,35,33,18,30,24,18,29,19,20,18,33,19,25,25,18,17,33,23,17,20,21,20,25,21,30,25,33,26,23,14,10,12,21,22,24,14,18,21,32,14,26,36,23,23,30,27,40,27,25,18,24,19,25,30,13,19,19,14,19,24,15,17,23,16,8,21,32,20,24,26,27,12,14,13,17,20,20,14,23,17,24,15,22,17,22,24,25,18,22,17,20,13,8,14,12,8,18,14,11,8,9,13,6,8,3,11,6,7,6,10:1
9,5,6,4,4,7,4,5,6,2,4,0,0,3,5,6,1,4,2,8,7,5,4,4,1,2,1,3,0,1,3,1,2,4,2,4,2,1,2,1,3,2,2,0,1,1,0,0,1,2,3,2,2,1,4,3,4,4,7,6,3,4,7,4,5,13,9,10,7,13,5,9,9,21,9,14,14,15,23,21,25,22,19,17,22,30,26,31,41,33,33,36,43,22,27,39,37,27,34,33,36,24,19,32,30,31,29,43,28,35,32,22,27,27,22,25,29,28,25,22,31,21,25,26,30,29,22,19,25,19,18,21,11,26,23,23,25,24,26,12,27,33,33,17,13,28,29,23,24,27,28,18,15,21,28,25,22,29,15,42,26,33,21,19,19,11,25,23,28,38,37,39,37,28,33,33,40,41,28,28,32,32,37,41,30,29,42,34,22,22,23,23,29,39,24,30,27,26,18,40,33,30,38,35,31,37,21,27,35,31,28,32,25,30,29,34,30,33,39,40,33,32,39,44,34,37,22,20,35,22,24,38,22,28,26,18,21,20,31,20,15,11,27,19,20,13,16,21,12,11,12,16,15,26,29,19,12,13,17,7,8,13,10,13,18,8,15,9,9,11,10,11,15,10,3,6,9,10,7,7,4,10,8,6,2,2,4,9:2
7,4,3,5,4,2,8,5,8,3,2,3,5,4,3,0,4,3,5,2,5,6,1,3,4,4,3,3,0,0,1,3,2,2,3,0,0,2,2,2,1,1,6,1,2,0,1,2,1,2,2,2,1,4,3,1,3,4,9,3,6,2,4,2,7,11,13,7,20,5,8,23,19,14,14,15,22,15,20,24,27,28,23,35,28,33,35,29,42,36,33,30,38,31,49,32,37,41,23,24,39,36,31,38,29,32,46,24,28,23,39,27,36,28,28,31,32,32,24,34,41,26,25,21,25,38,22,24,19,23,33,17,17,15,32,18,28,21,23,20,25,24,16,20,27,24,25,17,25,24,23,16,19,29,17,27,14,19,24,27,23,25,17,25,17,25,26,29,35,17,31,22,35,31,29,35,31,40,27,36,26,30,37,42,30,34,34,41,37,46,26,34,29,38,45,38,21,36,24,22,28,27,28,31,33,27,33,32,20,29,40,20,22,20,27,19,33,27,30,30,21,34,37,28,18,31,27,35,19,38,32,18,16,30,22,26,24,25,30,12,20,14,9,20,14,20,13,13,10,15,16,11,13,16,20,19,18,14,18,15,4,9,19,21,8,10,16,6,15,14,9,13,8,9,5,3,12,5,8,7,6,8,5,2,10,5,8,6:2
2,8,7,6,2,8,5,10,3,6,4,3,3,2,2,1,5,6,4,4,3,6,8,3,0,2,0,4,3,6,0,3,2,2,1,2,0,2,1,3,1,3,3,2,2,1,1,0,0,3,2,2,1,1,3,4,2,7,4,5,6,5,5,9,3,7,13,3,13,7,16,4,10,8,16,11,12,16,18,14,20,24,20,35,19,35,28,17,21,26,40,37,25,43,22,40,20,31,37,26,31,27,30,37,25,44,27,37,31,24,29,27,19,36,38,22,19,27,31,31,35,21,36,14,33,27,27,34,25,26,26,24,18,14,19,21,21,31,23,17,18,23,16,28,23,22,20,33,19,18,25,28,24,17,26,21,23,23,16,24,36,27,38,22,28,26,32,19,31,23,44,32,13,32,34,29,31,32,40,20,35,20,17,40,40,26,34,28,39,39,30,28,30,24,26,40,31,32,33,45,33,37,38,34,29,24,30,27,15,30,26,29,33,21,25,22,27,8,35,28,24,39,23,29,21,29,32,32,15,21,27,27,18,30,31,18,18,21,22,15,18,18,20,22,20,27,23,21,11,5,15,12,16,15,19,12,21,10,12,5,15,6,10,13,12,8,14,16,10,9,3,3,9,14,8,8,13,13,11,7,12,4,9,13,3,5,5,3:2
5,8,8,8,7,4,4,2,5,2,4,2,8,3,3,5,2,6,6,3,8,7,8,4,1,1,6,2,1,1,5,0,3,1,5,4,2,3,6,3,7,7,3,2,1,4,2,0,1,3,3,1,2,5,3,2,6,5,6,5,6,4,6,6,4,6,6,12,10,15,9,15,10,13,14,20,16,14,27,24,23,22,17,20,30,24,20,33,38,38,20,25,35,32,27,26,25,44,31,31,19,38,29,35,29,48,20,38,34,36,42,24,28,18,33,30,26,33,21,25,32,23,39,25,20,37,36,35,39,25,22,32,35,23,29,30,29,17,26,21,23,13,29,26,14,19,22,15,32,30,35,25,22,23,30,21,20,32,38,27,24,37,26,23,27,19,26,28,30,28,25,36,19,31,20,34,42,31,19,30,43,43,33,36,42,43,44,32,38,34,21,36,35,29,16,38,31,30,32,35,28,33,35,30,32,37,39,28,24,16,23,27,33,37,24,27,35,41,33,30,37,38,36,33,33,26,37,32,19,13,26,30,25,22,18,30,23,31,20,18,22,11,19,12,24,17,17,26,16,21,13,9,19,14,14,8,8,22,17,10,16,12,12,15,12,13,10,16,8,9,11,7,7,12,5,5,15,13,10,7,10,9,11,1,9,2,8,4:2
7,5,5,5,0,5,1,7,7,2,1,2,2,4,1,4,2,3,3,4,2,6,3,3,1,2,1,4,0,1,2,2,1,2,0,5,1,1,1,2,2,3,3,0,4,2,3,3,5,0,3,5,1,2,1,2,6,5,6,10,8,7,8,12,1,7,7,11,11,12,8,14,13,15,16,11,18,17,24,21,22,27,29,22,23,27,39,38,41,?,?,45,34,51,44,43,31,37,43,29,33,43,33,40,35,40,44,45,45,46,35,24,36,37,34,31,40,27,39,24,27,47,25,24,30,26,23,27,33,25,29,26,27,29,13,24,26,25,33,19,28,20,20,23,12,18,21,22,29,30,27,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,34,32,42,37,33,29,43,41,49,30,43,38,53,38,45,38,31,30,25,28,38,45,32,51,33,37,41,30,37,47,36,28,29,37,29,43,39,37,46,37,35,28,40,43,46,47,37,39,33,28,43,30,41,35,35,28,23,29,29,25,30,29,27,26,17,28,29,18,15,17,10,12,18,19,21,19,19,19,31,26,33,22,26,33,37,27,30,38,40,32,38,16,17,14,22,12,9,14,15,7,9,8,11,9,8,6,7,6,7,7,10,7:2
4,6,8,4,2,4,1,10,5,2,1,3,3,3,1,1,2,5,0,2,4,5,4,1,3,1,3,5,2,0,1,3,3,2,0,8,0,1,3,4,1,2,3,2,2,2,1,1,2,2,3,2,1,6,4,2,7,2,3,5,5,3,4,2,8,6,5,15,6,7,9,10,12,11,8,12,18,12,28,17,23,29,30,20,16,31,37,43,40,25,25,25,28,37,30,40,44,35,28,37,29,35,43,43,36,34,38,37,32,32,37,36,34,43,21,35,28,30,26,26,35,29,31,23,20,21,24,22,32,4,20,20,23,20,20,25,15,23,28,30,22,16,25,36,37,26,24,29,23,24,27,21,21,30,31,24,24,31,27,19,19,31,?,25,29,40,20,34,34,22,28,29,31,26,31,26,40,37,43,40,29,30,43,35,26,34,42,44,41,32,31,40,22,30,31,36,27,39,28,36,19,31,37,38,23,33,35,36,35,40,35,33,27,23,31,30,22,26,41,22,27,23,26,27,29,35,21,29,25,22,29,21,24,26,24,20,16,19,15,16,13,20,9,23,16,14,20,14,19,15,16,14,11,18,19,19,17,12,14,28,10,9,20,15,9,12,14,14,10,12,9,13,10,8,13,11,6,9,15,6,3,11,7,7,4,2,4,4:2
2,2,7,7,10,1,6,8,2,4,9,2,3,4,1,6,5,5,2,4,0,2,5,4,3,6,3,2,2,2,2,4,1,2,4,4,2,2,0,5,1,0,4,3,1,1,3,2,4,1,1,5,4,2,4,3,5,5,4,6,5,8,9,5,4,15,14,9,16,8,11,17,9,18,23,7,15,19,31,27,33,33,29,35,31,43,39,39,38,46,34,40,41,46,36,48,50,20,33,35,33,43,34,42,45,31,39,32,43,25,32,34,50,39,27,27,30,22,32,22,19,24,29,29,34,27,24,26,29,28,17,27,19,30,20,32,33,33,27,30,31,28,23,28,31,17,28,24,28,21,20,20,24,25,29,19,26,16,34,24,31,22,33,26,25,26,24,27,27,27,17,19,35,31,33,36,41,38,34,26,35,37,46,42,32,40,36,31,34,36,36,43,37,30,28,32,37,36,34,40,44,32,36,39,44,20,35,32,40,39,37,38,30,29,30,33,35,26,38,38,41,25,22,40,22,30,22,28,34,19,34,40,24,29,25,17,26,29,24,23,18,17,20,25,17,20,12,15,18,22,12,13,18,14,18,21,22,26,36,15,31,18,20,28,24,24,29,30,30,25,13,25,40,26,23,14,13,20,17,13,4,3,5,12,14,7,10,10:2
5,7,12,3,11,3,3,3,3,5,8,1,3,3,3,4,4,2,2,4,3,3,4,3,5,3,0,3,4,1,4,4,0,2,5,2,0,1,1,2,1,2,2,3,2,2,1,4,1,2,2,4,1,3,5,4,4,8,11,7,4,6,3,6,2,7,13,14,11,14,10,19,8,16,3,16,10,20,16,22,32,33,23,33,33,35,42,35,36,42,40,37,50,36,39,37,32,34,35,35,45,39,30,37,44,54,32,43,32,40,37,34,29,30,38,25,37,39,27,28,39,28,32,31,29,32,31,26,32,33,41,32,25,12,23,37,21,29,23,22,18,22,30,28,16,22,26,29,27,15,35,27,32,20,19,29,19,23,29,15,24,23,16,41,30,27,20,27,31,19,28,23,31,30,35,41,45,35,38,39,44,40,41,39,38,32,41,44,41,46,37,32,28,43,40,42,38,37,31,40,39,31,37,31,45,40,44,27,35,41,40,48,46,34,36,25,42,35,40,34,31,30,40,31,40,30,30,24,30,24,27,31,27,31,27,19,25,18,13,26,23,18,17,23,22,21,20,16,29,26,23,20,25,31,23,24,30,31,48,42,39,38,33,46,46,35,23,17,18,16,15,19,10,8,12,8,6,7,2,9,12,9,8,3,3,4,4,9:2
3,5,2,10,3,5,1,3,4,8,6,1,4,6,4,3,3,5,3,4,4,4,1,8,2,4,2,2,2,1,3,0,4,2,1,1,4,1,2,0,4,1,2,1,0,1,3,3,4,6,4,1,3,3,0,4,4,7,6,7,3,6,9,6,9,8,6,11,8,17,10,13,12,12,21,15,17,18,20,22,19,26,26,28,24,43,36,35,43,39,45,46,43,34,43,40,47,27,25,42,40,41,38,31,38,39,51,40,28,48,37,30,35,35,37,29,34,33,35,21,35,36,33,28,14,27,26,23,27,27,18,23,13,22,24,21,38,32,21,18,24,30,20,23,22,24,29,19,22,33,20,29,29,30,29,27,22,35,22,33,37,25,21,18,25,19,29,17,21,24,27,28,40,35,33,32,46,44,40,23,35,37,43,37,43,39,32,42,43,47,29,39,37,41,45,43,37,40,39,38,41,41,45,30,39,39,44,53,27,34,42,41,31,32,38,33,31,34,35,36,47,32,38,47,37,36,32,22,20,20,29,27,34,21,24,25,29,27,26,19,14,20,15,15,18,17,20,22,10,18,10,13,14,12,20,17,13,7,19,15,21,13,12,10,4,10,9,11,10,13,13,17,10,8,10,8,8,12,8,11,6,9,4,8,5,6,10,4:2
6,10,4,8,6,8,5,8,3,4,11,6,6,5,3,9,4,7,5,9,6,7,8,5,14,5,7,8,4,8,5,9,1,6,3,7,3,2,5,5,7,6,6,8,5,2,3,5,3,3,0,0,1,2,2,1,2,0,7,4,2,3,2,3,3,5,3,4,1,3,3,5,4,7,4,7,9,5,6,7,11,6,6,9,6,10,6,10,8,6,9,10,7,10,7,7,10,6,6,7,12,6,17,16,15,14,7,9,19,11,12,15,16,11,13,13,20,27,19,21,22,13,12,17,23,15,19,24,13,17,11,21,14,11,15,13,18,13,21,33,16,20,16,12,18,22,8,23,28,20,16,28,28,22,22,23,32,31,27,29,24,21,26,18,23,28,21,28,26,14,26,14,23,22,25,21,14,11,24,21,13,25,19,19,14,19,20,19,24,15,16,13,11,18,25,19,17,19,16,16,18,19,24,14,17,23,21,16,12,14,15,18,18,12,23,17,18,9,19,13,16,19,22,12,16,26,20,23,16,20,26,25,20,27,19,23,16,25,38,45,42,19,25,30,26,34,44,63,57,39,27,15,18,9,14,19,9,16,11,12,13,8,12,17,15,18,12,16,10,10,11,10,7,7,11,9,9,8,10,11,5,8,7,8,12,5,6,4:2
3,10,3,5,1,4,6,4,6,4,3,6,3,1,5,2,7,2,1,2,2,3,6,1,4,1,2,2,0,7,1,2,1,1,2,1,2,0,3,4,2,0,5,1,0,3,2,1,2,0,4,3,0,3,1,2,7,3,3,3,6,3,6,6,6,3,7,11,12,11,15,8,14,24,14,17,16,18,26,32,29,17,27,18,33,42,37,48,34,34,39,38,36,45,44,39,28,41,33,22,27,34,21,46,37,42,47,48,31,34,26,28,27,41,37,39,31,30,32,35,33,28,39,31,23,28,21,38,32,34,14,30,24,33,20,41,27,32,23,33,26,28,23,20,19,24,32,31,27,30,24,27,17,24,31,25,25,22,42,31,29,37,27,21,32,35,35,27,33,29,45,41,31,34,38,34,41,23,30,43,35,22,29,39,31,50,37,41,39,44,38,47,40,38,48,38,38,39,35,34,34,32,41,39,34,33,39,29,40,30,36,33,33,38,34,34,28,20,24,38,34,30,29,30,26,27,29,21,33,26,18,21,25,27,30,19,29,14,21,32,21,24,18,22,13,14,29,12,10,18,17,19,21,24,31,27,32,29,30,38,19,17,32,24,34,10,37,50,50,53,43,33,47,30,23,19,11,12,14,13,10,8,15,7,1,4,9,2:3
10,9,7,4,4,7,4,3,6,3,7,1,3,1,6,3,7,2,3,1,1,4,2,2,5,2,2,3,1,3,2,1,2,1,0,2,0,2,0,1,2,1,2,3,0,3,3,2,2,4,1,1,3,2,3,6,0,8,10,3,5,4,6,12,5,7,10,3,6,14,6,11,15,13,10,18,21,11,14,23,17,18,24,25,37,27,40,38,40,42,35,28,47,28,32,29,27,34,44,37,34,43,37,39,48,30,47,26,30,37,39,31,42,26,24,42,31,18,32,32,26,27,38,28,32,30,18,31,39,25,25,31,22,18,24,22,19,24,30,27,27,28,26,20,22,31,21,24,30,34,26,24,29,27,23,15,23,26,34,16,24,24,31,30,24,32,26,17,36,13,31,23,27,29,31,24,50,39,29,27,14,28,39,27,35,31,26,40,33,16,27,26,16,26,41,31,36,35,28,38,32,36,33,25,26,28,37,35,22,35,19,28,23,31,25,36,29,33,26,24,21,28,38,41,21,32,28,25,49,32,21,28,35,32,36,23,28,25,20,18,19,27,16,16,25,13,22,17,14,22,21,19,17,19,26,26,25,31,30,38,42,33,23,33,33,31,31,38,35,17,19,17,14,23,14,15,9,14,9,7,9,9,6,7,3,7,6,8:3
2,6,6,3,8,6,3,4,3,4,3,2,3,2,0,3,3,3,3,3,4,3,3,2,1,2,2,3,1,1,0,0,3,0,0,1,0,0,3,2,2,3,0,3,2,3,1,1,4,4,1,4,2,3,4,4,6,6,3,6,8,10,4,6,5,8,8,13,15,6,6,7,14,28,18,9,20,15,25,27,27,23,18,33,23,35,40,45,45,38,39,42,39,41,41,28,36,25,27,40,36,26,28,37,30,43,46,31,23,25,43,30,32,24,33,45,39,45,28,34,41,36,25,16,21,29,24,30,25,25,31,14,17,26,20,20,24,38,22,27,24,27,35,23,33,28,26,30,32,30,28,41,33,34,30,28,31,20,18,24,23,31,18,32,44,27,21,31,18,30,27,30,23,37,34,32,40,35,27,31,29,38,42,30,32,45,35,50,41,36,29,25,33,25,24,37,27,25,25,30,23,21,30,27,27,20,32,30,21,36,30,29,34,33,29,34,32,37,34,40,39,44,42,33,39,39,43,25,31,33,30,14,25,24,27,19,25,22,24,25,17,29,28,14,24,19,22,13,13,11,10,19,12,17,17,20,19,14,15,13,9,12,15,18,19,14,12,17,14,11,12,13,12,7,7,13,10,10,8,13,9,11,10,4,6,6,3,10:3
4,6,9,5,8,6,4,5,3,1,6,1,4,3,2,0,3,0,1,4,4,3,1,1,4,4,2,3,4,3,3,0,1,0,2,1,2,0,0,2,3,0,1,1,0,2,2,3,2,0,3,3,0,5,1,3,6,4,8,5,6,4,8,4,5,5,11,9,9,11,16,19,15,16,17,18,19,24,25,30,38,16,27,41,31,43,35,45,26,41,39,36,49,41,35,24,29,34,34,33,32,38,32,43,38,41,33,38,36,32,27,31,36,33,34,35,47,34,34,22,29,40,29,29,31,33,24,26,24,16,18,25,25,21,23,22,17,25,20,18,21,15,26,24,24,35,39,30,29,25,41,37,35,27,37,18,25,19,36,29,33,37,24,27,25,23,27,33,17,22,27,29,22,13,31,26,43,31,27,43,29,26,25,42,50,27,35,32,38,41,46,45,44,41,37,44,37,37,30,39,29,34,32,24,35,34,32,24,30,24,31,41,30,34,31,30,28,26,29,17,39,31,40,42,35,41,35,27,20,16,26,23,30,22,26,25,32,26,18,34,25,30,13,23,26,23,16,24,13,22,15,15,20,13,17,18,10,22,23,10,19,16,10,18,19,12,21,17,16,7,8,11,13,9,14,8,6,7,7,8,11,7,1,8,5,7,8,6:3
8,7,10,7,9,4,2,5,4,4,8,3,5,4,0,3,7,8,5,4,3,3,3,4,1,4,5,1,4,4,7,4,2,3,4,5,1,1,3,3,2,7,1,3,3,3,4,1,3,4,3,1,1,5,0,2,5,5,5,6,7,1,4,3,9,14,12,9,7,10,9,10,11,10,12,18,20,22,19,36,32,26,36,34,37,35,40,30,46,44,35,49,47,44,41,53,42,28,28,43,38,25,36,46,40,38,27,45,42,35,46,33,40,31,30,30,41,36,32,32,35,34,29,39,27,15,29,25,32,25,41,22,17,34,19,25,28,24,29,26,43,35,32,26,25,29,30,24,34,19,34,29,32,28,28,26,26,21,37,21,36,39,22,24,30,36,28,27,29,22,33,29,39,36,26,30,27,32,34,27,32,44,39,28,27,37,38,46,42,41,32,31,33,29,36,25,37,25,32,37,26,48,24,30,29,37,46,37,44,29,25,22,28,34,22,27,36,36,34,36,39,35,31,32,32,24,38,32,38,17,32,39,33,36,28,32,25,27,36,17,31,17,13,18,14,20,24,25,18,19,20,17,16,25,17,16,45,25,30,34,41,41,40,50,43,33,37,21,18,25,16,15,10,11,7,11,9,9,19,7,7,7,11,13,7,9,11,16:3
2,4,4,8,4,7,4,5,6,4,6,4,7,4,3,2,4,7,4,7,4,6,4,1,4,3,1,2,2,1,5,2,2,1,2,3,1,1,1,1,0,2,4,1,2,3,3,1,1,0,2,1,2,1,1,1,7,3,4,6,7,3,6,11,11,6,8,13,14,11,18,12,13,20,19,19,14,17,29,28,34,31,25,37,29,32,39,42,38,34,27,37,29,33,30,34,29,33,26,24,24,24,57,37,27,52,21,35,26,28,25,15,35,28,29,33,30,45,23,41,20,28,25,31,18,25,24,23,21,32,19,13,16,28,29,12,27,19,21,29,31,16,29,22,18,29,17,22,29,14,25,14,25,28,13,22,37,29,24,22,31,29,30,28,39,33,37,31,32,21,30,19,24,21,32,43,36,28,36,38,29,37,26,26,33,27,28,35,30,30,46,40,37,20,32,28,45,26,40,24,43,33,36,35,37,34,29,32,26,38,29,24,17,20,43,24,32,35,30,28,28,32,24,25,24,20,18,28,15,22,26,27,24,26,20,29,21,22,17,19,19,24,17,16,19,18,22,15,20,25,16,24,16,20,15,29,21,10,16,32,28,39,37,32,38,46,42,49,31,38,20,16,13,11,11,8,8,18,9,20,8,7,5,6,4,4,6,7:3
5,9,8,4,7,2,9,2,5,5,4,4,6,3,3,3,1,4,4,3,2,3,0,0,0,2,4,2,2,0,1,3,2,3,2,1,1,2,1,3,4,1,3,2,3,3,4,3,2,2,3,3,3,0,3,2,2,8,8,6,3,5,7,4,11,6,12,8,11,7,11,9,9,12,16,13,14,21,16,19,28,28,24,22,12,37,29,36,40,40,28,41,27,38,27,43,42,40,32,48,31,29,40,54,51,34,50,42,0,3,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,0,1,0,0,0,0,0,1,0,1,0,0,2,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,1,1,34,25,24,28,31,30,35,23,26,20,35,30,37,32,36,28,36,26,33,42,33,34,28,37,45,44,39,36,42,34,36,31,47,25,25,34,29,44,36,35,34,26,35,29,36,34,39,38,31,30,26,35,31,23,31,28,28,37,32,37,42,28,24,39,26,34,20,31,30,32,24,27,26,34,29,23,25,21,16,26,10,19,23,16,25,13,12,21,14,22,8,13,11,10,16,14,13,25,19,8,15,8,14,11,19,12,16,12,11,11,17,6,14,7,8,9,9,18,6,7,4,8,8,12,9:3
4,5,1,4,9,5,3,4,3,3,3,0,3,0,1,3,2,3,3,5,0,3,3,2,1,2,2,2,5,1,4,3,2,2,1,1,2,1,1,3,0,5,3,2,3,2,0,1,0,0,1,3,3,1,1,3,1,4,5,5,4,9,4,3,2,9,7,17,8,7,14,18,11,16,16,21,16,28,29,21,19,33,34,42,34,34,41,41,24,34,43,32,29,35,28,40,31,39,45,34,34,30,38,44,36,35,28,38,31,45,16,35,35,35,31,21,32,27,39,31,31,36,28,24,28,32,36,25,21,32,26,24,17,33,14,18,25,31,16,16,31,32,31,22,29,20,17,29,19,21,34,18,34,18,21,44,28,15,24,23,34,27,26,22,28,29,23,34,31,35,24,27,31,33,31,45,34,34,33,31,40,23,30,49,51,47,33,33,46,31,37,38,38,33,41,40,29,42,32,38,38,38,33,33,26,35,31,30,26,37,31,31,36,33,39,36,29,49,33,42,33,36,32,34,32,20,40,30,35,26,22,19,16,22,25,22,18,28,34,24,18,10,24,23,24,17,15,17,16,13,16,19,16,18,22,20,34,43,31,31,28,32,22,15,33,43,46,53,34,48,27,40,22,14,14,8,10,15,11,8,10,8,11,3,6,7,4,5:3
6,5,8,5,4,7,4,4,7,1,1,2,6,2,3,2,2,4,2,1,5,2,2,1,1,3,2,1,1,0,3,2,2,2,1,1,2,1,3,1,2,1,1,2,1,0,2,1,1,3,7,0,2,1,0,4,5,4,3,6,5,3,4,4,7,4,8,11,8,15,11,14,11,24,15,14,16,19,31,24,31,28,23,24,28,36,40,49,32,33,36,32,32,36,29,35,29,27,32,26,31,29,28,34,38,57,33,40,43,28,34,29,29,33,32,37,25,16,28,39,36,35,32,33,27,32,28,30,34,26,28,27,20,18,33,35,22,26,24,22,34,36,24,26,27,19,20,15,19,30,31,30,34,37,31,37,22,30,19,30,12,25,32,39,26,25,25,31,29,32,40,30,31,28,20,48,47,38,33,34,37,29,55,50,41,48,40,33,36,47,49,43,47,43,51,38,43,45,44,39,37,33,25,38,39,37,27,29,29,32,34,28,25,24,30,18,26,29,32,27,20,25,22,29,31,34,20,34,12,23,25,24,19,28,18,19,26,27,22,33,22,19,20,14,14,28,12,17,13,24,11,22,23,18,23,24,18,15,20,11,15,16,11,10,17,13,13,18,18,13,10,12,17,8,6,7,8,12,3,3,10,7,5,6,9,5,2,8:3
6,9,9,4,5,3,6,5,6,6,7,3,8,5,4,1,1,5,2,3,4,1,3,1,5,4,4,2,2,5,2,1,2,1,2,1,2,0,0,2,5,0,3,0,0,1,2,2,4,2,1,6,2,2,4,4,2,5,7,8,5,3,11,9,5,7,8,11,13,15,14,18,12,23,16,13,27,19,26,22,32,25,28,27,27,39,45,38,34,31,37,48,32,43,34,41,36,27,40,49,36,42,35,47,42,46,56,40,41,43,36,36,48,39,23,32,36,31,36,31,26,26,37,34,30,32,32,36,28,24,35,30,37,29,31,31,30,30,33,37,31,24,35,32,32,33,32,26,35,25,23,27,28,33,40,29,33,26,36,33,33,27,34,27,30,29,24,24,26,23,30,35,51,29,37,42,45,31,45,42,41,31,39,44,36,33,25,39,41,29,41,36,44,39,38,32,30,38,42,30,40,36,37,35,29,26,38,38,48,40,29,36,44,43,39,33,26,41,36,34,33,38,40,32,35,51,34,27,29,46,37,37,31,34,24,26,32,23,31,30,27,18,31,31,24,29,23,21,20,19,23,19,14,27,34,23,14,20,23,29,41,46,30,32,22,17,33,31,32,52,46,30,51,48,29,13,16,15,18,12,7,16,13,12,6,10,9,8:3
5,4,6,8,2,4,6,2,1,3,10,3,10,4,5,6,2,3,7,2,3,1,1,0,4,2,3,4,4,1,1,7,2,6,0,0,0,0,2,2,2,3,6,1,0,2,1,4,4,1,2,3,0,0,0,1,5,5,5,5,4,5,6,5,6,17,5,11,13,10,20,8,13,18,18,15,29,19,18,30,26,36,25,27,37,37,40,42,41,25,33,41,40,44,47,46,37,39,47,40,37,26,39,40,39,47,47,43,38,44,41,39,37,32,38,34,33,33,33,33,32,40,48,26,30,29,29,30,25,27,29,24,35,17,22,22,27,20,26,32,25,32,25,32,32,22,31,35,25,26,34,23,20,29,25,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,43,31,37,47,42,38,38,36,24,37,34,39,39,41,34,39,33,43,44,37,32,42,42,33,27,31,28,30,31,25,31,44,34,48,37,27,27,32,35,35,36,42,28,25,28,21,25,22,30,24,21,23,30,32,24,14,21,20,14,16,15,17,17,19,24,23,20,33,22,30,29,33,31,27,24,29,37,23,28,30,52,41,34,17,13,19,10,10,13,17,11,11,11,12,8,3,6:4
7,12,4,6,2,5,3,5,7,1,4,4,2,7,3,2,1,6,2,4,4,5,3,2,2,0,2,0,0,3,0,2,0,4,1,1,3,0,1,1,1,0,1,0,0,0,1,3,1,2,1,3,4,0,4,6,2,9,4,7,3,6,10,7,7,3,10,9,11,11,14,9,4,16,20,15,16,18,22,32,32,36,28,35,38,40,42,43,39,43,35,42,42,47,41,28,32,41,36,45,31,28,43,47,41,51,36,35,32,39,24,46,34,39,42,39,42,38,47,43,41,30,30,19,30,38,38,21,28,20,28,28,23,31,27,31,30,26,29,25,42,26,32,33,36,18,24,25,28,36,24,26,36,24,30,33,23,33,24,25,23,21,34,30,28,35,23,20,40,29,21,45,35,39,27,38,41,50,41,29,43,40,49,42,38,37,34,32,42,45,36,31,35,37,35,36,20,39,45,37,41,42,47,49,42,41,32,29,31,47,43,48,27,38,38,29,28,34,38,47,44,32,38,38,38,42,37,32,31,37,31,28,27,22,32,28,36,28,28,35,25,22,23,27,28,24,23,22,19,22,19,22,19,32,24,28,27,28,35,25,29,22,21,24,41,46,48,56,50,51,46,30,45,41,50,32,16,18,15,17,16,13,12,11,17,8,13,13:4
7,5,4,9,2,8,2,2,3,3,1,6,7,2,4,3,5,4,2,6,3,3,1,4,3,4,1,2,4,4,2,2,2,2,5,1,3,3,1,1,0,1,2,2,1,1,1,1,0,3,4,2,1,1,2,4,4,8,8,4,8,9,7,8,2,13,9,7,12,15,13,8,7,10,17,10,19,15,23,21,24,31,24,23,19,36,34,38,24,38,33,39,32,26,27,36,39,25,40,40,36,37,40,39,39,51,54,29,29,20,36,33,23,35,28,26,32,38,40,31,36,34,28,42,25,42,26,37,25,22,18,21,24,31,11,20,30,29,21,23,23,21,30,22,22,28,24,23,19,20,25,23,21,37,31,23,32,22,25,20,16,21,26,20,36,25,34,19,25,20,27,32,22,31,22,24,37,26,27,26,30,20,42,35,32,20,32,41,45,30,30,25,39,32,20,42,17,43,35,35,27,35,44,35,37,30,23,29,32,37,32,21,15,27,29,26,26,30,30,33,21,28,39,36,23,26,20,29,19,24,34,27,36,27,29,34,33,25,27,24,29,21,21,18,20,13,19,24,17,15,24,22,18,21,23,31,24,31,22,15,19,15,23,28,36,24,21,43,50,46,41,36,35,19,22,10,15,9,16,13,8,10,9,8,7,5,7,4:4
7,4,5,3,6,11,2,2,2,4,8,3,4,4,5,3,1,5,0,5,1,4,1,5,3,4,5,4,2,3,1,0,2,2,0,2,1,2,0,1,2,2,1,6,1,2,0,0,4,1,3,5,0,0,2,3,4,6,7,8,5,7,7,4,7,10,17,10,17,17,5,15,16,12,21,19,26,20,30,11,37,29,23,18,29,24,35,34,30,41,51,33,31,43,38,26,33,23,29,33,36,28,32,23,40,37,33,36,38,34,29,34,31,30,25,35,25,24,25,21,24,28,30,34,26,22,30,28,35,26,28,28,20,27,23,30,23,22,21,28,16,18,23,18,24,30,30,30,18,21,35,21,19,31,24,26,21,23,30,24,25,21,15,17,35,16,27,30,35,37,27,24,28,29,22,36,31,35,20,27,35,38,34,38,38,44,30,32,35,39,35,35,30,36,39,31,37,37,25,44,32,37,33,31,34,40,31,46,42,41,25,26,30,38,39,44,33,24,36,28,32,28,34,23,18,23,43,28,29,24,29,27,40,22,17,31,27,25,37,20,28,26,31,19,20,16,24,11,19,20,20,9,32,19,26,32,32,19,29,21,30,19,10,14,21,30,41,37,53,49,48,44,43,45,42,49,45,37,27,35,32,25,23,15,4,6,9,7:4
6,3,6,6,4,7,9,4,6,3,9,7,7,2,10,4,6,5,2,6,3,2,2,3,2,5,0,1,1,3,1,3,0,0,0,1,1,2,1,1,4,1,3,1,0,1,4,0,2,0,2,1,1,5,2,2,7,3,3,2,1,6,8,6,4,9,4,17,18,5,15,10,17,17,22,22,24,21,23,19,36,25,32,32,31,48,33,40,40,42,29,37,42,29,53,36,26,32,35,24,35,38,33,38,41,36,35,43,40,34,33,34,39,41,32,25,40,40,36,20,30,35,34,23,18,29,23,28,22,18,27,29,18,21,32,25,22,23,25,32,21,33,35,24,28,16,31,28,27,27,31,29,29,37,32,29,26,17,22,24,16,25,30,23,19,29,29,24,22,31,31,31,27,23,33,31,43,37,39,37,30,28,48,45,45,40,38,43,43,36,46,45,45,39,41,37,42,38,36,30,25,29,33,31,33,31,35,36,33,40,43,30,28,26,31,35,17,41,42,30,32,33,38,27,33,34,27,29,31,27,24,20,25,24,13,23,15,19,27,17,15,15,16,23,13,11,21,20,22,12,19,26,22,14,21,14,21,10,20,23,26,42,20,30,34,37,22,26,36,42,37,37,44,10,18,10,3,16,16,13,9,13,7,6,14,15,6,3:4
3,4,5,7,4,4,8,10,8,5,9,3,2,2,4,3,9,3,5,2,1,1,3,3,5,4,4,5,2,1,0,3,1,1,2,4,1,1,0,3,0,4,2,1,0,2,2,2,0,2,5,1,3,1,1,4,2,9,9,4,5,2,6,7,6,8,9,9,8,13,8,8,13,22,13,16,16,26,14,25,30,32,33,30,27,37,46,26,26,20,33,36,41,44,36,27,33,35,34,32,37,47,44,42,55,41,46,42,30,36,33,30,35,41,33,35,34,35,33,34,32,22,29,27,31,23,23,17,23,37,21,17,10,28,28,18,28,28,27,11,18,37,23,30,37,18,24,31,27,25,21,33,17,22,21,23,28,29,22,17,25,26,11,20,24,23,26,19,27,13,22,26,29,15,22,14,27,23,21,27,27,25,39,32,23,35,39,33,29,40,43,28,30,30,45,32,35,25,27,22,34,28,36,40,29,22,31,35,35,29,24,25,29,28,26,36,27,38,35,29,38,33,37,33,31,30,23,34,30,27,36,27,34,27,30,25,32,25,32,27,16,19,15,15,22,19,17,12,22,13,13,20,15,30,27,24,14,17,30,13,10,16,15,15,18,14,18,8,10,12,8,10,10,4,18,8,10,10,7,4,7,7,11,6,10,5,5,0:4
?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,18,19,16,17,22,9,28,23,30,30,21,39,31,24,36,48,36,40,31,25,45,42,39,41,37,26,45,38,32,33,30,50,43,45,48,44,36,38,40,27,39,31,29,25,26,30,29,23,19,30,27,34,24,21,17,18,39,21,39,24,29,14,28,26,37,37,20,28,32,20,22,27,40,20,29,27,33,27,21,24,35,22,19,12,34,22,37,27,17,19,23,29,32,15,32,31,23,27,23,14,27,21,28,33,28,31,46,21,27,15,46,38,35,39,30,34,29,30,40,36,29,46,23,37,33,25,43,39,23,33,31,23,32,40,32,32,32,38,38,22,37,32,40,26,33,33,38,25,17,24,18,22,20,29,10,22,16,17,23,26,30,26,40,22,28,19,24,22,13,19,18,14,19,19,15,25,21,30,8,22,23,24,26,28,14,26,20,15,17,10,8,10,16,11,16,12,16,10,6,11,11,12,9,11,14,16,13,14,9,19,9,4,11,5,13:4
7,3,5,6,4,6,4,4,2,5,4,2,3,1,5,2,5,4,3,0,1,3,0,4,4,0,1,3,3,2,5,1,3,1,0,4,4,0,1,0,1,0,2,1,3,1,2,2,1,2,2,2,2,0,4,3,1,6,6,7,10,9,9,8,4,4,11,17,12,17,9,16,11,13,18,19,18,19,28,25,31,35,31,31,29,32,41,44,41,42,47,34,30,52,49,41,35,36,32,36,38,38,28,41,42,37,46,47,31,38,43,31,31,33,38,37,27,38,34,33,38,36,31,31,31,41,29,37,29,33,26,17,21,22,31,22,40,31,30,30,26,28,32,24,26,25,33,24,28,18,22,30,29,15,32,24,36,23,27,24,30,30,15,35,30,32,30,39,26,28,34,30,31,36,46,40,39,29,37,39,35,36,41,40,29,35,46,34,36,39,43,41,37,39,31,44,34,46,38,38,34,36,39,24,44,39,46,41,36,34,39,36,29,29,33,38,38,49,50,43,34,35,28,34,33,29,37,36,29,27,22,32,38,27,28,42,28,24,19,17,31,19,23,27,23,21,27,17,17,16,30,20,34,24,20,23,37,32,26,28,41,41,38,45,44,41,31,25,25,15,5,18,26,37,47,42,46,37,19,20,27,18,13,9,15,13,12,11:4
9,9,11,12,1,3,6,5,5,1,5,4,7,2,1,6,3,1,1,1,4,3,1,0,2,3,9,1,3,3,3,3,1,0,3,1,0,2,1,3,2,2,3,0,2,0,2,1,1,0,1,5,2,5,4,1,8,7,4,7,3,5,6,5,6,7,11,12,13,16,6,14,13,18,19,15,16,17,24,27,30,27,20,27,29,33,46,41,40,40,30,30,30,42,37,37,38,31,31,28,37,38,40,34,50,31,43,32,29,39,35,25,34,43,30,28,38,31,37,29,31,25,33,25,24,24,29,25,30,30,21,27,28,21,17,27,27,29,26,18,27,39,38,20,23,27,21,25,24,22,32,34,30,28,29,27,29,30,29,35,24,20,28,17,41,35,18,32,23,20,24,36,32,32,33,26,41,33,32,23,38,36,32,32,39,47,46,43,51,46,40,34,44,45,34,40,30,25,33,37,42,37,41,34,30,32,43,47,45,34,32,39,36,38,31,27,34,26,21,26,34,32,23,30,28,29,27,34,15,25,24,28,30,23,27,27,27,23,18,23,15,19,24,16,19,24,16,10,13,13,15,21,19,25,21,20,29,19,17,19,15,13,18,13,19,16,16,9,16,13,11,8,15,15,9,15,12,11,14,10,8,2,8,10,3,7,8,9:4
4,9,5,11,1,3,6,5,6,5,7,1,12,1,3,1,8,4,3,5,6,3,3,5,1,4,3,1,4,3,1,2,2,3,1,5,1,1,0,0,2,2,1,2,0,1,3,2,1,1,3,0,3,1,4,5,3,6,10,5,5,3,8,4,7,12,13,5,3,15,6,9,14,15,20,20,20,23,21,16,23,29,16,25,19,24,32,32,36,32,32,47,39,41,40,29,25,32,30,17,26,37,32,18,37,24,42,25,23,26,34,29,27,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,2,1,20,27,20,20,23,18,21,24,31,24,28,28,19,24,34,27,24,25,26,20,19,20,22,24,15,23,19,15,27,17,26,33,36,35,28,26,37,30,32,33,39,35,33,34,33,46,45,43,39,32,44,42,39,32,29,36,39,43,40,41,26,38,38,35,40,44,39,40,47,44,40,33,34,39,40,35,32,31,33,29,39,33,39,37,24,26,32,21,24,27,21,26,36,23,26,27,35,32,30,24,23,34,37,36,26,25,26,29,13,20,22,22,20,22,10,18,27,21,22,23,27,16,21,19,21,17,15,22,16,15,11,16,12,11,10,19,13,18,14,8,18,7,16,12,13,6,6,9,10,13,13,11,11,5,6,7:4
10,9,2,7,3,3,4,3,2,2,7,4,1,4,2,6,1,3,3,4,1,5,1,6,5,1,7,1,3,2,2,2,1,4,1,2,4,1,3,1,5,6,1,2,2,3,2,1,2,3,0,2,2,2,1,4,6,8,5,2,4,5,6,7,5,7,7,3,16,3,14,9,11,21,21,11,17,23,17,31,28,32,24,35,27,36,37,45,47,26,40,45,53,45,32,29,30,40,31,42,38,33,34,47,48,51,47,43,35,31,33,45,32,30,36,29,36,40,34,28,28,27,20,21,23,18,20,26,32,38,24,25,22,27,19,23,20,24,25,17,22,33,16,19,27,23,13,35,22,21,31,26,25,34,23,27,24,26,34,29,26,17,18,19,32,26,28,22,21,27,21,39,28,25,30,45,38,40,41,42,27,40,42,32,43,34,32,32,44,43,47,45,38,41,39,41,44,40,35,31,30,36,49,45,41,35,32,28,27,34,23,27,37,38,22,19,20,29,30,18,25,27,35,25,22,24,25,29,29,28,19,33,20,24,26,27,33,25,19,16,27,19,28,12,22,24,15,19,19,12,18,15,25,19,23,20,21,26,27,29,27,30,46,30,34,29,35,23,19,26,15,10,10,6,6,13,8,10,12,13,13,10,19,10,10,9,2,4:4
7,3,6,11,8,6,6,10,4,7,4,1,7,2,2,7,5,2,1,5,0,3,3,2,4,4,4,3,1,4,0,5,4,0,1,1,4,1,0,0,3,5,2,1,2,3,1,3,0,1,3,1,0,3,1,1,3,3,5,4,5,3,2,2,3,12,5,8,11,6,6,10,9,15,19,13,17,17,22,27,29,17,26,28,32,43,40,48,34,33,36,30,35,49,29,35,42,41,33,42,41,38,39,33,50,42,42,48,44,34,39,45,44,32,46,43,38,40,38,42,31,34,52,29,32,22,31,28,43,25,33,38,26,29,32,28,24,30,29,26,21,35,32,27,42,23,20,23,23,32,24,31,21,29,25,25,26,24,26,30,26,37,21,35,30,27,25,27,33,23,39,33,33,31,36,33,35,46,38,28,29,44,38,33,38,50,40,50,47,43,40,40,32,27,35,36,42,30,35,30,41,38,34,31,31,27,21,35,21,29,30,33,27,30,33,34,36,22,27,30,37,34,20,33,33,28,27,42,29,27,22,23,22,31,31,24,25,27,28,21,27,24,25,21,12,14,18,25,24,18,19,26,15,29,29,24,13,22,14,33,21,11,18,18,19,12,18,21,13,7,12,16,11,9,13,20,9,10,12,5,9,4,4,6,9,5,16,8:5
9,10,5,7,10,9,5,6,8,3,6,3,5,4,3,5,4,6,4,1,6,3,4,3,4,9,4,2,3,3,1,3,3,1,2,3,5,2,4,2,0,1,1,4,4,4,2,1,4,5,1,4,2,2,3,2,3,3,7,4,5,2,3,7,10,16,6,12,10,17,12,16,7,17,18,17,9,19,26,23,29,23,30,43,31,39,38,43,56,35,42,53,39,45,43,48,46,40,42,33,33,41,34,43,55,41,40,43,52,47,42,39,35,35,42,39,39,27,30,30,31,39,25,33,26,23,34,23,32,22,30,30,25,24,26,24,28,24,26,27,26,23,29,22,25,31,26,26,30,33,28,28,34,38,25,31,26,28,26,24,27,32,22,25,20,30,34,24,37,24,33,19,40,31,39,30,34,43,37,39,45,43,51,48,42,40,39,49,46,38,34,31,29,34,42,35,39,28,39,29,41,29,30,43,39,45,50,44,48,28,49,43,42,34,36,26,34,41,30,38,31,39,48,48,52,47,39,35,46,26,27,22,34,41,29,19,29,36,30,32,12,18,20,15,25,40,17,15,16,19,19,22,25,25,24,26,23,26,17,22,17,18,17,12,20,9,14,7,10,12,17,17,16,14,9,17,13,9,8,5,4,8,6,11,5,8,9,6:5
7,5,3,6,8,5,1,8,4,9,6,2,1,5,1,3,1,6,2,2,4,7,4,2,3,5,5,4,4,3,3,0,2,2,3,2,3,2,2,1,5,0,2,2,1,2,1,5,1,1,0,3,4,3,1,1,5,6,8,2,5,4,7,5,6,7,6,5,6,15,10,7,15,12,19,13,13,20,16,27,24,29,32,29,25,35,46,49,43,47,44,41,49,46,42,32,43,33,33,24,20,38,27,39,37,44,35,33,24,32,34,24,26,29,27,31,30,46,32,41,27,20,32,31,31,37,28,18,34,12,18,22,21,19,22,23,23,32,28,12,31,29,18,18,20,17,27,19,20,26,16,18,32,27,15,12,29,19,21,29,16,19,22,29,24,23,28,27,31,16,27,29,28,32,24,32,38,39,32,28,30,37,29,43,41,27,28,39,41,39,40,38,42,41,32,35,38,43,31,29,28,34,37,29,24,38,27,40,30,22,37,18,29,25,21,28,31,22,33,22,23,23,21,30,32,31,37,38,32,26,26,25,25,28,26,20,16,27,22,17,22,15,19,16,21,23,12,25,12,14,13,21,24,27,18,22,15,26,17,23,29,16,20,18,14,12,16,17,17,19,15,22,19,17,8,7,9,3,4,12,11,11,11,3,13,7,14,6:5
1,9,5,2,5,5,5,13,6,4,5,4,5,9,4,3,8,6,3,5,1,3,4,4,6,1,5,2,2,3,1,2,3,2,0,4,1,2,2,1,1,4,3,2,2,3,2,0,3,1,0,1,2,1,2,2,4,6,3,5,10,2,10,2,8,5,13,16,17,9,10,12,16,14,16,17,15,27,18,24,23,20,22,27,22,39,33,37,37,41,41,35,42,39,40,44,27,37,30,39,41,31,34,32,38,31,36,35,38,30,34,39,25,33,29,18,41,35,34,23,28,19,29,16,14,17,27,24,25,35,39,24,24,21,20,24,29,26,23,21,30,36,31,28,31,21,32,31,27,33,31,29,30,16,27,18,22,27,18,29,22,29,20,21,41,23,22,36,27,30,23,26,28,22,32,29,46,32,30,45,39,42,41,34,51,37,48,48,32,43,36,31,34,33,36,42,25,37,41,35,37,42,27,38,44,41,34,33,26,30,39,34,33,31,34,38,23,25,35,34,23,29,30,31,30,21,30,34,25,31,29,39,35,25,21,31,29,28,24,29,22,20,23,24,11,27,19,25,17,26,19,19,20,18,17,22,12,17,16,12,21,16,20,14,12,11,10,12,14,15,11,14,11,12,4,10,8,10,10,5,14,9,13,10,9,5,11,6:5
6,9,2,2,3,10,7,7,3,8,5,4,4,8,6,3,5,2,5,3,4,6,1,2,7,7,7,7,4,3,4,2,3,3,3,1,2,0,0,2,0,2,7,2,1,2,0,3,4,4,3,7,0,1,2,3,4,4,4,7,9,10,3,4,8,7,12,9,11,9,9,11,16,13,16,15,15,16,18,29,20,24,40,25,35,36,41,44,44,30,38,43,51,36,40,42,38,38,49,43,40,41,34,52,47,50,54,47,43,41,40,38,33,36,44,36,37,50,38,36,35,33,26,35,37,29,23,33,40,34,29,26,34,28,25,23,30,31,31,19,26,19,36,28,26,28,17,15,28,33,34,38,23,44,36,33,25,26,27,30,35,24,33,21,25,?,?,?,?,21,31,28,37,38,34,37,41,41,45,50,37,33,49,34,45,45,52,53,39,29,42,34,41,42,39,42,37,28,27,33,43,33,37,36,49,38,37,25,41,43,25,35,38,46,35,30,37,23,37,35,44,41,29,27,36,37,23,36,40,33,36,29,25,35,27,31,28,29,25,22,34,16,26,17,13,18,15,27,17,26,24,10,23,14,14,29,22,21,13,21,23,15,13,20,12,16,8,17,21,16,21,33,20,26,12,16,14,12,8,12,10,14,11,6,8,7,12,7:5
15,8,7,5,9,6,6,6,8,4,5,3,6,14,4,7,2,3,7,5,4,2,4,6,6,2,4,6,6,1,3,2,5,5,5,5,2,0,1,1,2,1,1,2,1,3,1,4,3,2,2,1,3,0,1,9,4,6,9,6,8,6,6,8,6,14,11,11,15,13,9,13,13,13,15,12,19,18,26,36,24,29,26,30,30,34,33,37,34,34,34,35,38,38,39,31,47,31,33,36,34,27,43,37,46,42,47,45,28,29,31,28,35,45,35,31,41,40,29,37,35,36,36,24,34,29,18,30,20,32,25,35,23,24,37,28,22,37,31,34,36,31,29,28,24,29,32,29,31,32,34,35,28,33,19,27,33,22,32,32,31,28,20,35,31,32,26,35,30,38,36,36,25,33,31,38,44,44,37,27,32,36,46,46,44,42,41,40,52,35,40,42,30,30,39,28,24,43,40,29,31,41,31,18,25,32,36,32,30,40,32,31,34,28,45,39,44,39,42,36,42,37,31,29,23,43,25,34,43,28,36,37,30,30,26,37,36,29,28,29,29,33,24,31,23,29,21,28,19,26,25,26,28,25,27,25,28,31,26,24,33,36,38,36,46,40,54,32,39,43,41,38,27,30,18,12,25,10,19,9,11,13,12,12,9,9,5,8:5
10,5,8,1,3,7,1,6,6,5,3,4,5,5,2,4,4,2,5,7,5,3,3,6,10,4,4,2,1,2,3,0,3,2,0,4,4,1,2,2,0,1,2,1,1,1,1,4,1,4,3,1,2,1,3,3,5,6,9,5,5,6,3,11,4,11,11,11,4,9,13,13,8,16,18,11,18,19,27,32,31,30,34,24,37,42,39,44,26,32,32,27,41,36,23,39,35,37,46,39,39,37,41,38,40,30,30,37,37,27,24,38,40,25,40,31,34,47,34,34,35,34,32,28,29,29,17,27,32,33,31,37,25,14,19,26,19,29,38,29,29,20,31,29,32,23,27,28,31,33,33,34,29,28,24,18,25,17,26,20,21,37,38,21,20,32,36,30,27,21,32,34,36,41,38,44,44,29,44,41,24,38,38,34,39,35,30,41,45,35,36,42,30,37,44,39,35,48,41,41,32,41,41,36,26,35,37,41,40,29,26,33,34,33,27,28,33,41,33,31,34,37,41,33,44,44,18,32,25,39,34,26,35,32,22,23,25,24,25,28,28,20,29,22,34,17,14,20,27,23,24,18,18,26,22,27,28,21,32,26,26,48,39,31,34,28,35,31,28,28,27,44,42,31,36,33,32,33,20,20,17,24,19,9,13,11,14,17:5
6,4,12,4,7,8,7,14,7,4,2,6,1,3,1,6,4,5,5,1,3,1,3,1,2,5,?,?,0,?,?,?,?,0,?,?,?,?,?,0,0,?,?,?,?,?,0,?,?,?,?,?,?,0,0,?,?,?,?,0,?,?,?,5,10,?,30,?,5,?,10,0,3,17,10,?,?,50,?,?,?,?,60,?,?,?,60,60,0,?,?,?,10,?,?,?,?,?,?,25,?,90,?,0,?,?,70,?,?,70,?,37,?,?,50,50,0,30,?,0,50,?,?,10,60,10,30,30,15,?,?,0,30,?,35,40,46,30,21,26,23,33,21,27,28,32,26,29,40,23,33,24,32,22,30,13,24,28,30,23,29,29,26,14,34,28,28,20,13,38,34,39,45,26,27,36,27,40,33,31,31,30,30,39,24,21,34,42,27,39,30,35,16,26,23,18,31,53,34,46,36,32,33,43,26,43,43,43,37,36,58,34,30,8,31,30,40,17,28,42,11,36,36,15,22,37,27,31,9,36,29,26,25,30,24,16,20,23,13,23,15,9,30,30,17,18,24,20,19,14,22,23,24,20,29,20,29,18,29,24,19,13,19,34,43,34,54,24,47,49,29,25,39,40,49,34,13,30,16,20,18,8,13,6,10,10,10,10:5
2,6,2,3,3,3,7,3,3,8,8,7,6,2,4,6,8,0,2,8,2,2,0,5,2,2,2,2,3,2,2,2,1,0,2,5,0,2,2,1,0,2,0,0,1,1,2,0,1,2,2,3,1,2,1,0,4,8,8,2,6,5,6,3,3,4,10,17,14,14,12,15,5,10,21,16,17,25,16,22,22,24,18,33,21,39,43,45,35,32,31,43,33,39,32,44,22,33,27,37,29,29,31,38,34,36,45,45,36,42,23,30,45,44,30,35,43,42,35,39,37,32,24,19,23,19,24,28,27,27,28,18,25,23,28,19,30,17,35,31,24,19,19,30,25,27,31,27,33,33,19,29,28,27,24,14,17,15,36,29,25,26,23,26,34,30,27,27,27,26,22,21,26,29,39,36,27,24,32,33,27,28,41,54,44,29,34,37,32,37,42,27,20,38,31,30,39,26,28,24,26,32,32,26,22,40,37,37,20,24,26,29,28,27,33,37,33,30,32,32,31,23,27,31,29,34,20,32,40,24,26,26,31,27,44,39,36,19,28,11,9,21,16,22,19,23,14,17,10,12,16,26,20,12,24,16,26,16,14,35,24,25,33,16,21,31,29,32,25,19,44,21,16,16,17,8,13,23,13,12,13,9,13,12,12,6,6,5:5
5,4,6,6,5,6,4,10,11,3,7,3,5,3,2,10,1,4,3,3,4,2,3,2,2,6,2,4,3,2,4,0,0,3,2,0,2,1,1,2,2,1,3,0,2,0,1,3,3,1,1,3,3,4,0,4,2,3,7,7,3,2,11,10,11,7,9,10,13,15,9,13,12,18,26,21,15,19,26,26,35,37,22,29,39,46,39,34,31,44,28,37,47,47,37,38,37,36,23,32,47,36,31,45,49,44,48,36,30,33,26,33,22,37,39,10,41,54,29,46,41,34,36,23,21,30,35,29,29,24,30,28,25,21,24,34,24,31,27,20,36,24,33,23,32,25,30,31,18,24,26,25,27,23,27,23,28,27,30,25,27,44,27,0,21,31,24,33,23,26,43,32,39,40,36,39,43,43,39,38,43,36,36,38,47,41,26,?,?,?,?,31,31,45,45,32,36,36,27,32,30,38,32,46,36,31,28,30,26,38,39,28,29,40,39,29,34,31,29,38,32,37,39,36,35,30,50,40,35,36,44,39,29,34,22,21,28,28,35,34,25,33,20,32,17,18,16,34,13,23,19,24,23,20,31,20,25,26,20,14,26,13,16,26,24,20,19,21,16,14,16,17,12,18,11,7,6,14,12,20,16,17,12,6,12,14,11,12:5
3,5,7,7,9,5,8,5,5,5,4,6,2,6,3,4,2,2,3,3,2,0,3,0,4,0,4,2,4,1,2,2,0,1,3,2,1,2,1,2,2,1,2,4,3,3,1,1,2,2,1,2,0,0,1,2,5,1,4,3,2,3,6,3,8,6,5,6,3,8,11,8,13,13,12,19,22,22,18,24,29,26,38,30,22,35,38,46,37,28,39,40,39,41,40,36,41,30,40,29,40,44,31,34,40,33,42,44,28,36,37,36,26,33,30,33,35,25,29,23,25,34,20,25,20,29,32,33,21,24,18,21,18,24,22,34,32,29,30,26,38,27,19,20,28,24,19,23,24,22,24,31,30,23,29,21,30,19,28,18,25,20,33,25,26,40,34,27,27,28,35,24,30,37,38,40,40,24,33,33,26,21,44,45,36,53,31,43,40,34,28,25,32,41,27,31,32,26,28,30,25,25,27,38,26,33,28,37,36,22,37,34,30,32,30,27,34,24,29,27,16,38,36,37,26,33,22,21,21,27,26,36,16,30,29,21,15,27,28,17,20,22,17,17,16,17,16,22,28,22,19,25,19,22,27,25,19,34,18,30,13,7,13,12,28,16,20,14,8,23,13,17,9,7,4,3,7,10,10,11,10,11,9,13,13,4,5,9:5
8,3,11,7,9,7,7,1,4,3,8,0,2,1,5,5,3,2,4,6,5,4,4,6,3,3,4,2,3,2,1,2,7,6,6,6,5,6,0,2,3,2,8,8,1,3,1,3,2,1,2,1,1,0,5,2,5,6,2,2,4,7,7,1,8,5,5,10,10,6,14,5,10,12,23,17,23,18,22,23,30,30,32,33,28,47,35,34,43,39,34,26,38,48,29,46,31,34,34,32,36,28,33,35,39,60,?,?,?,?,?,?,?,?,?,42,34,29,35,33,35,26,32,23,25,24,20,24,24,32,24,32,32,18,26,31,29,23,29,33,38,29,29,28,32,30,29,24,26,31,29,30,33,32,29,30,25,20,34,28,29,33,19,34,33,28,30,24,28,22,27,30,29,25,39,39,39,37,39,34,33,32,40,31,35,50,48,37,39,36,37,32,38,26,29,31,43,28,26,38,34,37,40,27,33,42,40,39,37,29,30,33,32,46,26,31,32,23,33,40,25,24,38,36,40,27,20,32,27,25,22,25,20,32,35,22,23,23,33,18,20,18,31,17,18,13,15,19,21,16,28,19,19,35,28,19,18,25,22,16,18,14,16,11,10,9,18,11,16,16,11,15,9,15,15,12,17,11,8,10,11,10,6,5,5,9,4,3:5
9,6,15,10,12,11,20,24,11,13,19,9,9,16,4,6,16,4,11,1,5,11,12,9,12,2,4,6,4,2,4,4,4,2,1,2,3,0,0,2,4,1,2,3,1,2,4,1,3,4,0,5,2,3,1,1,5,5,4,5,6,7,5,8,5,5,11,10,10,16,12,8,15,11,22,18,19,19,23,32,15,28,34,29,31,40,38,29,40,25,48,43,35,43,50,26,36,29,38,24,43,42,31,35,44,41,36,27,35,30,30,44,32,32,34,28,33,39,30,30,23,43,24,36,35,38,29,24,18,16,28,29,28,18,35,30,32,18,19,33,33,27,17,31,23,25,18,28,19,29,36,26,37,28,32,32,30,27,36,24,27,32,29,29,39,36,33,23,34,33,37,45,36,39,28,41,41,46,45,49,27,45,24,35,40,28,30,33,33,37,40,35,37,19,37,21,40,28,21,38,33,35,30,27,31,26,35,28,39,28,24,31,26,35,34,36,31,24,22,33,40,28,38,23,38,25,25,34,28,19,20,25,28,27,32,32,26,36,22,45,33,25,29,21,31,22,24,17,23,16,20,24,29,20,24,24,18,36,36,28,38,25,11,44,45,41,45,57,46,47,35,38,51,43,57,34,38,28,21,24,35,32,15,18,18,16,13,11:6
9,5,1,4,2,6,7,2,7,3,10,4,2,4,3,8,5,7,4,1,5,1,2,5,1,9,6,5,6,3,2,2,2,3,5,2,4,1,1,3,1,2,3,0,2,3,4,3,1,2,3,1,2,0,3,4,9,4,11,4,1,4,6,6,8,10,12,13,10,7,12,8,13,9,12,22,14,16,23,24,37,28,27,21,36,35,36,45,37,32,36,31,46,21,38,39,30,38,34,47,40,39,35,38,39,38,32,42,43,40,28,34,33,47,32,32,29,37,30,26,40,40,37,35,34,42,30,41,22,31,25,37,29,30,22,28,18,21,25,32,13,?,?,32,29,30,35,28,26,26,33,32,31,31,28,37,34,29,32,27,24,38,21,24,42,38,29,33,40,38,35,42,36,29,40,36,29,43,38,32,31,26,45,48,35,43,50,42,35,48,33,50,40,33,38,42,38,42,37,32,35,41,38,27,37,41,48,32,32,32,37,39,34,36,35,30,38,24,28,37,32,30,31,45,45,46,32,38,45,48,42,35,40,37,42,36,41,35,29,27,25,30,34,17,23,30,21,27,23,28,25,17,23,25,30,33,21,19,26,18,19,19,24,22,25,20,19,26,23,15,14,18,14,12,18,12,14,7,13,12,9,12,18,10,17,9,15,10:6
6,3,6,4,8,5,2,8,2,4,5,4,6,6,1,5,6,7,6,2,5,10,4,5,6,4,4,6,4,0,2,3,1,1,7,5,3,3,4,2,0,1,2,2,2,1,2,2,3,2,2,2,1,4,11,6,7,5,4,9,3,2,4,4,10,16,11,9,14,12,14,16,18,23,11,17,17,14,16,25,27,38,31,23,33,34,34,39,37,45,38,36,28,38,45,41,26,41,30,44,37,36,37,40,21,49,40,40,44,33,26,27,26,41,39,33,46,29,38,29,34,37,33,40,35,17,26,32,19,24,25,23,23,29,27,23,30,12,13,19,26,33,23,21,16,25,39,30,27,24,31,34,33,21,23,28,29,34,32,34,28,35,33,21,39,31,22,37,32,29,39,39,48,19,41,38,31,45,45,41,23,45,40,40,42,44,42,46,43,48,41,40,39,41,38,45,51,39,36,37,40,33,33,46,41,40,39,36,30,31,36,37,37,36,38,30,29,29,40,45,37,31,46,43,37,34,42,40,38,35,31,39,34,40,40,32,34,35,35,31,28,34,25,21,17,29,18,19,29,23,21,20,24,25,27,12,21,21,26,29,24,32,21,27,17,30,31,22,20,37,26,33,29,38,19,17,29,20,20,44,49,40,30,20,17,17,9,13:6
5,9,9,4,3,2,6,4,5,4,3,4,4,3,2,4,5,1,3,4,4,4,4,10,5,6,2,2,3,4,3,6,3,2,3,3,2,3,1,3,0,3,1,0,5,1,3,2,6,5,3,5,2,2,2,2,2,5,8,5,3,6,12,8,5,7,9,16,9,13,10,13,19,22,14,11,22,19,27,27,33,27,32,33,35,32,34,46,35,43,41,44,35,31,36,25,41,37,34,39,34,28,33,41,39,50,40,48,43,37,39,38,45,41,38,39,38,37,40,38,42,36,48,37,22,41,14,27,35,24,22,21,28,25,28,28,20,27,33,25,40,38,28,24,32,35,44,35,32,47,40,31,42,38,39,26,30,33,31,30,38,41,31,19,28,32,35,38,38,21,22,40,36,27,33,44,33,31,46,39,38,34,49,50,36,36,37,42,40,38,32,33,30,44,40,37,29,41,33,35,37,35,34,41,36,43,32,44,40,42,27,40,35,33,43,41,41,24,27,36,31,34,37,25,33,35,32,38,23,23,48,36,41,30,34,27,29,34,20,37,36,20,26,20,23,34,20,29,25,15,28,24,30,22,26,20,23,22,26,28,29,16,14,12,28,19,11,17,18,16,21,27,20,23,10,15,9,13,18,21,12,19,12,9,13,12,13,12:6
7,7,6,6,8,7,9,4,8,4,3,5,5,1,7,2,1,1,3,4,2,3,4,3,6,5,2,3,4,2,1,2,4,3,3,2,1,4,0,1,5,2,0,3,0,0,3,1,1,1,2,7,2,4,3,2,4,4,6,6,5,4,6,4,9,7,11,7,10,27,13,8,18,21,17,15,18,17,18,20,32,26,31,25,30,44,42,41,32,22,35,19,21,31,21,29,42,29,32,34,19,28,38,32,36,36,44,42,33,34,35,27,34,35,33,34,22,31,26,20,33,33,27,24,18,28,28,24,29,21,24,22,20,22,34,35,28,38,19,37,32,38,22,22,23,26,27,27,27,30,23,22,21,21,25,29,34,29,39,27,35,27,15,24,22,25,20,25,29,26,26,35,33,27,44,31,46,28,30,30,30,22,35,29,31,31,40,39,28,25,34,27,33,33,30,33,38,29,34,31,26,33,25,24,40,33,34,31,31,29,38,30,21,31,38,32,35,30,33,33,29,31,46,37,33,34,37,28,20,31,37,29,37,36,34,39,27,39,34,35,31,22,29,25,14,23,18,18,10,18,32,21,21,30,22,28,19,28,26,28,28,22,21,29,22,30,37,46,34,37,22,35,31,32,22,36,17,22,52,33,41,46,23,23,19,16,16,11:6
9,4,3,4,9,3,6,9,3,6,4,8,3,6,4,2,3,5,3,3,4,5,6,4,2,5,1,1,6,5,2,0,1,3,2,2,1,1,2,3,2,2,4,1,1,2,1,1,3,0,2,3,3,0,1,2,2,4,9,4,3,10,4,6,10,9,6,12,7,13,15,15,8,13,20,14,20,14,21,26,19,25,21,26,34,42,41,30,41,31,21,39,32,52,36,36,37,38,37,33,33,31,32,39,34,38,39,39,50,42,21,28,31,36,35,42,35,41,38,41,38,31,29,24,32,24,35,37,30,31,29,30,30,23,32,40,32,27,29,33,24,46,35,31,20,34,26,28,26,27,23,32,34,35,42,32,27,36,33,34,36,26,36,37,24,20,38,39,33,35,33,41,35,37,48,34,42,50,33,31,41,40,33,39,34,34,34,40,37,28,38,39,32,32,38,44,37,44,40,31,40,34,30,30,37,48,40,37,33,41,44,35,26,34,31,33,35,34,38,32,39,37,42,31,32,28,26,30,29,21,28,30,39,24,25,32,38,39,22,32,34,37,26,30,37,27,17,21,28,27,26,27,27,20,27,22,23,28,25,20,30,30,34,28,30,22,20,10,58,33,24,29,23,32,26,24,34,24,29,22,25,20,34,51,52,54,49,49:6
14,4,5,3,9,7,3,10,8,7,5,3,5,6,6,2,3,4,5,2,5,7,6,6,14,3,2,3,6,6,4,5,3,2,4,3,3,2,1,1,1,3,3,2,1,2,3,0,0,2,3,1,0,4,3,5,9,6,11,0,7,7,6,5,3,7,17,8,11,8,9,11,9,11,18,13,10,9,16,19,29,30,18,23,32,33,26,36,40,24,37,15,37,33,33,33,26,23,33,22,21,25,27,27,23,34,28,38,44,42,45,45,27,40,40,37,45,43,30,36,37,31,32,29,33,32,25,21,29,23,16,30,29,23,25,32,21,27,12,23,19,29,30,30,27,11,34,35,32,21,36,29,31,30,35,24,39,34,37,27,34,26,32,22,30,14,16,20,29,19,30,27,22,33,40,28,36,38,40,31,47,34,47,44,47,41,47,40,39,46,46,49,35,32,32,22,28,25,10,27,27,38,31,30,31,27,28,35,36,29,28,28,28,33,26,24,22,31,25,21,21,32,38,32,40,46,38,28,24,25,27,24,24,29,25,24,26,20,25,23,23,21,20,18,20,31,29,23,21,14,35,25,22,14,20,21,17,17,23,18,19,7,21,17,19,19,23,17,24,26,22,22,22,19,18,20,12,18,20,17,22,14,11,15,9,18,4,9:6
11,7,6,8,4,10,5,7,2,7,11,5,1,2,5,2,3,2,5,3,2,1,3,2,3,3,3,2,1,2,5,3,1,4,1,0,1,3,1,2,0,1,3,2,3,1,4,1,1,1,5,1,2,0,2,4,7,7,6,3,3,4,3,5,5,6,4,9,15,16,9,16,11,14,9,19,7,18,18,35,32,27,24,30,30,31,41,41,34,38,31,27,37,40,37,34,39,24,29,31,28,28,43,29,43,38,44,37,26,39,48,48,39,29,42,36,37,29,38,36,44,31,46,20,?,?,?,?,?,?,?,?,?,?,?,10,26,25,22,33,31,20,20,29,20,30,28,26,18,32,27,27,32,29,32,20,26,29,34,?,?,24,34,24,27,23,27,22,32,20,36,30,36,41,34,33,44,33,44,36,29,41,38,39,41,34,39,33,30,54,29,35,25,33,32,34,33,35,26,29,22,36,34,33,35,40,31,35,38,27,30,26,33,29,35,25,25,22,30,43,27,41,39,33,36,31,24,20,28,41,33,36,34,35,27,27,21,34,22,25,23,20,15,20,16,27,32,20,16,16,22,16,13,14,23,18,20,23,26,28,36,25,59,50,47,59,42,44,32,50,56,41,49,38,45,34,43,36,20,21,19,14,15,14,14,12,17,10:6
6,5,2,5,4,3,5,11,6,4,7,6,6,8,4,4,3,4,5,3,4,6,4,9,4,4,5,2,1,5,0,2,4,3,1,5,4,1,2,1,0,0,5,1,4,2,2,0,2,1,3,3,1,1,2,3,3,5,5,5,3,3,8,4,11,9,5,15,10,12,19,18,13,16,11,21,14,24,18,31,26,21,23,24,17,15,22,31,18,29,31,32,26,19,29,32,28,24,28,20,13,23,39,43,34,37,52,25,32,20,31,42,25,34,17,27,35,29,25,21,28,28,21,20,24,33,27,28,28,23,28,29,29,17,24,27,33,28,21,29,32,30,27,31,20,39,35,50,40,28,16,29,22,29,31,30,26,32,29,28,22,17,39,39,28,36,27,36,29,36,26,29,35,31,37,36,28,36,40,41,36,46,38,27,29,26,31,28,18,41,29,36,33,35,26,30,25,33,38,21,30,29,25,28,28,31,34,44,35,19,27,30,40,34,25,20,14,11,31,23,32,29,22,26,32,23,35,28,24,27,25,24,28,13,20,23,21,22,22,23,23,19,33,23,12,17,8,25,24,14,13,7,23,13,13,24,17,19,17,27,37,28,19,21,32,44,30,29,33,30,33,58,38,56,53,46,20,38,29,17,16,16,12,15,20,12,11,6:6
11,9,7,5,5,4,3,6,2,8,5,1,4,4,8,6,3,2,3,3,3,4,6,5,2,3,2,4,3,3,2,3,2,3,0,3,1,2,3,2,1,2,1,0,1,1,2,0,2,2,1,2,1,1,2,4,6,5,6,5,5,2,8,3,8,5,12,11,12,16,15,15,19,17,19,13,21,27,21,20,20,18,11,33,21,42,36,34,33,26,28,28,30,28,33,28,32,32,42,40,37,45,41,36,34,39,43,32,22,38,30,23,34,30,27,34,21,27,32,32,36,32,29,22,16,28,37,22,27,22,19,19,17,29,24,20,23,28,24,23,28,24,24,29,17,28,36,32,38,44,21,21,34,17,29,30,24,27,32,32,34,41,28,24,39,24,30,32,27,24,29,26,30,36,41,46,48,33,43,24,39,27,48,39,25,27,32,35,38,40,37,33,26,30,38,35,27,33,40,28,32,21,25,32,34,21,42,29,22,27,31,32,39,34,34,24,41,46,47,43,51,47,31,30,34,36,27,28,37,28,38,34,27,21,32,27,33,33,12,25,27,31,22,14,26,18,26,25,22,15,19,19,23,24,18,20,19,14,24,19,8,16,12,16,16,9,13,18,16,12,8,13,11,17,21,17,14,12,16,16,17,11,12,18,13,10,14,13:6
8,5,4,6,7,4,5,3,3,2,1,5,6,2,5,1,5,1,3,1,2,4,4,4,8,4,1,6,5,0,2,1,3,1,1,0,1,1,1,2,0,1,2,5,3,1,0,4,2,3,4,1,1,3,3,5,9,4,4,4,4,10,1,6,6,9,9,8,12,6,11,12,23,14,21,14,25,15,25,29,31,20,29,27,31,34,45,39,38,36,35,32,31,28,39,37,32,33,31,31,40,23,33,42,37,37,39,28,34,29,28,37,34,25,40,25,17,27,26,35,36,24,30,18,21,24,25,28,23,20,21,23,13,21,23,13,21,22,14,23,24,27,28,23,22,20,31,27,22,32,36,23,30,33,29,28,22,29,26,35,30,30,38,21,34,28,36,25,34,35,28,35,28,33,38,43,41,43,42,35,41,27,41,43,40,39,43,37,36,44,30,42,24,24,27,28,26,30,18,15,24,20,13,19,22,26,26,38,26,34,23,33,31,34,32,33,33,24,33,32,28,32,38,30,21,27,22,28,29,20,28,24,29,22,20,37,25,38,28,22,26,27,33,20,27,24,29,23,19,22,20,15,21,26,20,22,21,23,12,30,16,19,23,21,14,17,12,23,21,21,10,13,11,18,18,12,11,14,17,17,10,13,8,19,10,5,12,5:6
6,9,9,4,3,8,5,7,10,5,4,4,4,1,2,1,2,2,2,2,1,2,7,2,4,1,4,2,6,3,1,2,1,3,4,0,2,6,0,1,3,1,6,1,1,2,5,0,1,1,2,2,2,4,2,5,2,5,2,5,5,6,8,7,3,11,17,7,16,15,16,15,11,19,13,19,16,19,20,17,24,26,27,29,23,20,43,34,33,35,42,30,41,48,47,46,37,36,24,32,26,34,36,42,44,27,38,34,39,30,44,47,34,29,30,33,27,33,34,24,30,34,22,22,28,27,33,17,27,18,10,19,17,16,17,27,19,18,21,22,28,22,26,23,31,22,19,23,14,23,26,15,22,25,14,20,32,17,28,22,28,19,16,22,27,28,18,25,21,27,21,28,24,27,40,30,38,34,33,27,29,38,33,24,25,29,35,41,28,37,40,36,36,30,26,36,32,44,28,19,36,26,21,20,30,34,35,31,38,38,37,33,36,36,36,26,44,42,35,41,24,36,28,32,44,39,38,31,38,37,26,30,27,31,24,32,45,32,30,34,28,28,24,13,31,24,23,30,18,18,19,20,13,22,23,32,20,22,26,42,20,35,42,34,32,35,33,27,28,54,64,60,48,56,55,42,45,42,41,38,41,38,23,20,22,10,11,10:6
16,20,14,14,9,11,13,7,8,7,11,10,6,8,8,8,13,8,7,5,4,10,14,12,8,8,3,9,14,9,9,9,8,9,6,6,4,6,3,7,3,7,5,3,6,7,6,4,0,3,2,1,3,1,2,5,6,3,6,2,2,6,3,3,5,4,5,3,7,6,5,7,4,6,6,14,6,17,10,15,13,21,14,10,17,14,11,12,11,13,13,15,25,23,14,23,12,22,17,22,16,15,15,22,19,20,29,23,23,29,20,22,24,32,19,36,26,29,33,22,31,27,29,32,24,21,39,31,22,30,23,30,31,13,16,15,13,22,29,32,19,20,30,25,30,35,27,31,23,28,21,38,35,29,29,27,30,35,27,29,28,35,27,28,39,29,36,26,32,37,30,34,28,29,44,34,37,26,28,33,32,39,34,43,27,30,37,45,48,57,30,39,42,51,53,47,56,55,51,53,44,50,45,49,52,40,40,24,28,39,26,21,31,27,30,31,44,33,35,27,39,23,23,23,23,34,37,27,21,34,33,35,30,36,33,37,33,28,32,32,27,27,19,12,32,18,30,20,21,27,16,23,23,29,29,21,16,18,23,17,16,28,30,36,24,31,26,29,26,25,15,13,27,16,20,22,25,15,20,17,20,19,24,11,18,12,12,18:7
11,9,11,12,8,8,5,8,8,12,9,12,9,3,10,1,8,9,9,7,7,6,10,10,12,11,12,5,4,6,8,6,7,5,6,1,2,2,3,3,3,7,3,2,4,6,1,2,1,3,4,1,2,0,4,6,3,2,4,6,4,5,4,2,4,6,4,4,5,4,12,7,3,3,11,4,5,10,8,11,10,12,14,9,12,12,20,10,13,6,18,16,20,13,16,20,13,26,24,14,14,17,24,26,21,24,26,20,19,18,21,26,25,21,28,22,23,17,24,27,24,21,20,22,21,23,20,10,21,26,18,16,19,21,21,18,21,19,23,35,31,30,27,23,21,21,34,20,28,24,23,19,23,33,17,23,20,19,28,22,28,16,24,19,29,23,30,23,22,15,25,19,33,24,29,27,22,36,28,28,22,37,30,25,20,24,34,20,26,24,38,22,21,21,18,26,30,29,26,17,23,22,24,11,19,19,32,16,21,27,24,13,21,14,18,23,26,22,29,15,16,14,21,22,11,27,22,21,24,21,16,27,16,22,29,21,34,27,24,22,20,15,20,15,16,19,14,12,22,22,23,22,15,13,10,23,18,17,22,17,19,28,29,15,15,16,19,20,16,16,18,27,14,29,22,17,15,17,17,16,10,7,10,11,12,13,7,10:7
19,10,15,11,11,5,6,9,7,4,12,7,6,9,12,8,5,7,5,4,12,13,4,9,7,4,8,2,7,12,6,4,6,6,2,3,8,6,4,0,1,4,1,3,0,1,2,0,0,0,2,3,2,3,5,1,6,3,5,3,3,2,4,2,5,9,6,4,5,2,3,2,5,3,12,4,15,7,10,8,6,12,11,11,6,12,17,12,10,9,10,16,19,9,19,13,10,11,18,21,13,6,18,17,20,26,16,16,15,13,18,14,8,21,13,20,21,34,23,21,35,22,23,8,24,27,27,24,23,22,30,38,21,28,20,25,12,16,27,20,26,23,24,22,22,30,21,19,14,27,27,39,27,36,12,29,24,37,35,22,25,34,38,36,28,35,24,21,25,31,43,37,36,22,29,27,36,33,25,30,24,22,29,30,38,28,27,27,23,23,34,34,39,29,37,30,37,28,13,37,27,33,27,27,27,35,19,38,29,31,32,24,29,29,28,13,36,22,29,27,41,35,30,23,28,33,29,23,23,22,31,27,26,24,27,30,18,26,12,17,17,22,21,20,21,26,19,19,20,19,16,29,25,28,23,25,24,24,34,22,42,43,42,32,29,38,29,60,53,57,50,61,51,53,47,21,24,22,18,27,18,19,21,22,19,21,14,23:7
10,7,14,5,7,10,8,9,8,9,3,8,11,3,7,8,6,5,11,7,9,5,5,5,9,6,3,4,10,3,4,5,6,4,10,6,5,5,2,4,1,1,1,3,4,3,3,4,1,1,3,4,2,1,6,3,1,2,3,5,3,0,1,3,6,3,3,1,5,5,7,2,5,3,9,8,9,2,11,15,18,8,16,26,12,16,11,21,19,19,20,23,23,23,17,25,14,21,19,8,20,24,26,25,26,23,24,29,22,28,33,23,24,32,32,34,28,35,30,36,33,31,25,34,31,18,31,32,31,30,19,23,35,23,29,21,32,16,29,21,23,27,19,37,31,28,25,30,28,22,20,24,36,19,34,24,17,17,38,23,22,27,26,25,26,28,16,25,23,27,26,27,13,33,25,16,29,36,30,23,31,29,28,21,21,33,25,17,26,26,27,23,26,30,29,33,26,26,19,22,39,15,34,36,29,25,20,32,21,14,22,28,30,37,27,29,31,32,18,24,34,26,31,19,28,19,30,33,25,33,19,31,20,32,27,35,23,33,22,27,29,27,15,23,16,26,21,12,30,19,23,18,15,13,22,13,19,15,17,15,15,14,20,31,27,19,30,24,24,18,19,19,24,16,22,17,21,20,24,26,23,20,22,14,21,18,8,15:7
13,7,10,6,12,4,12,9,7,7,7,4,2,11,0,4,7,8,9,6,16,7,14,4,3,7,9,5,5,4,6,6,4,7,8,5,2,7,3,4,6,3,1,1,2,1,0,5,0,5,2,1,2,3,1,1,3,4,4,4,3,3,2,6,3,5,4,7,4,8,6,3,4,9,10,8,4,4,17,11,9,7,11,15,15,8,12,15,12,12,20,15,13,16,17,11,21,10,18,11,11,15,15,13,17,21,32,18,23,12,23,27,14,23,21,20,27,30,21,29,24,17,18,22,23,35,23,27,26,11,11,22,17,26,16,19,19,17,17,30,34,35,26,24,16,28,23,27,17,33,19,16,27,26,23,32,26,23,27,21,19,22,25,41,28,29,27,21,27,21,26,27,23,40,30,32,23,20,26,32,17,29,24,27,11,18,24,21,14,15,17,13,28,33,40,25,23,21,27,22,30,22,27,10,35,27,19,33,23,33,22,27,25,19,22,25,26,16,28,29,23,30,32,25,36,17,32,20,15,38,18,24,31,23,26,30,22,23,29,28,18,18,29,12,13,35,24,20,20,18,19,19,24,13,10,22,33,18,18,8,25,12,19,21,17,11,30,23,19,12,22,14,15,10,14,16,17,17,14,23,11,9,16,20,13,10,7,16:7
10,11,5,6,7,9,9,5,10,4,2,7,2,1,4,4,8,11,3,3,7,6,5,5,9,4,5,1,6,5,5,4,3,4,2,3,3,2,3,3,3,2,0,3,1,1,4,3,5,6,1,3,4,2,2,2,0,1,4,3,2,3,3,8,3,2,3,1,7,11,5,5,6,9,7,7,1,12,8,13,10,13,5,14,8,7,6,6,9,14,17,16,17,25,25,16,22,18,15,11,15,15,25,24,23,23,20,27,24,20,20,11,21,30,23,22,22,25,27,14,22,21,25,22,25,27,33,25,27,15,13,22,16,22,28,28,24,21,20,32,21,24,28,35,34,36,34,30,30,31,25,29,28,28,33,28,30,19,15,21,26,21,20,30,21,27,19,24,27,21,26,25,26,34,23,24,31,22,22,22,19,22,20,22,33,23,29,22,32,22,27,23,22,22,26,21,29,35,20,30,30,13,15,24,29,27,20,23,28,26,18,25,23,24,24,42,34,36,34,29,27,25,33,27,26,28,28,23,27,36,29,30,22,25,27,29,22,20,28,19,15,15,14,9,18,21,15,26,17,31,31,22,29,23,29,30,31,17,16,23,23,26,25,18,27,17,23,13,27,16,35,19,23,13,16,15,23,23,18,19,19,16,16,16,7,16,9,12:7
19,12,8,9,13,3,7,9,13,7,8,8,6,10,2,10,10,6,3,4,8,8,12,4,5,8,9,13,11,8,6,4,8,4,2,5,4,2,2,3,2,3,5,1,0,4,1,1,4,1,1,5,2,3,4,2,3,3,3,1,4,0,2,3,12,1,2,5,6,8,5,7,4,9,7,4,4,11,12,9,15,14,13,8,12,18,23,7,10,16,6,15,16,24,18,17,12,15,21,12,22,16,18,24,30,29,25,21,12,22,18,26,14,26,20,11,22,31,17,31,23,23,28,22,21,31,33,20,28,18,26,27,29,20,21,29,36,33,31,19,30,34,23,18,25,30,23,29,26,29,25,20,23,29,31,26,35,25,21,33,25,42,18,31,32,34,19,21,20,26,25,33,30,32,31,25,25,37,36,17,32,27,36,35,23,32,27,23,35,32,31,26,25,31,39,20,36,23,21,36,35,34,35,25,31,32,38,32,25,29,29,22,21,23,38,28,27,25,28,28,27,34,27,23,25,42,35,36,27,37,31,35,29,30,32,25,36,26,26,35,28,24,17,20,23,13,23,17,25,32,29,15,22,18,15,25,17,31,21,42,36,51,39,38,41,30,22,26,39,49,61,53,46,39,46,38,42,44,42,41,39,34,31,27,19,30,21,20:7
9,10,14,8,13,10,6,6,8,8,14,1,2,5,3,3,9,5,3,7,9,8,8,7,4,9,7,6,3,3,3,7,9,3,0,9,7,2,5,7,5,3,3,3,1,3,4,4,5,5,7,6,2,9,2,3,3,4,5,5,4,0,2,5,6,3,4,8,6,5,6,5,4,10,8,6,8,12,10,8,14,13,9,17,9,17,13,11,16,17,16,14,16,13,12,16,10,21,14,14,15,10,17,13,26,20,18,20,13,27,14,19,26,20,26,26,25,29,29,32,33,33,37,28,15,11,25,32,24,24,23,21,33,11,23,23,24,17,30,35,21,36,30,26,34,30,24,25,27,23,19,24,28,34,20,35,19,29,30,31,26,30,26,37,30,20,26,31,24,26,21,17,19,38,23,32,38,32,29,19,30,32,36,28,32,31,31,34,28,24,17,28,26,27,21,17,28,32,24,33,35,34,34,44,37,42,34,33,37,37,25,31,30,24,32,17,25,26,27,21,35,12,25,23,15,26,22,18,19,19,27,21,26,22,24,18,16,26,18,23,27,20,21,18,19,18,27,27,18,29,25,31,22,30,22,37,46,40,48,49,48,50,56,56,39,41,40,36,37,30,35,30,35,26,21,18,13,19,16,13,21,18,23,15,33,22,11,16:7
11,10,8,14,8,6,5,7,3,7,11,6,10,3,2,2,6,5,6,6,10,3,3,11,6,1,1,4,7,9,6,9,6,3,2,4,1,2,6,3,5,3,3,5,1,2,3,3,3,1,2,5,1,1,0,1,2,5,6,3,3,8,3,5,3,4,2,3,4,10,6,2,2,5,5,4,14,7,15,12,9,10,11,15,5,12,15,10,13,14,14,17,21,15,23,12,13,18,21,13,13,19,23,20,30,22,21,14,20,19,27,23,21,25,22,28,32,26,34,32,26,25,22,21,18,28,21,24,27,39,27,31,24,27,40,28,24,28,22,35,33,39,26,28,?,?,17,26,18,34,21,32,25,28,27,29,26,27,25,27,28,35,30,27,37,36,31,21,33,34,33,35,25,28,31,31,41,33,46,32,38,31,33,29,35,25,31,29,27,27,28,26,36,32,27,40,25,38,32,16,28,22,25,25,21,21,33,26,23,25,19,19,27,22,16,25,22,16,22,25,20,26,30,30,21,24,28,26,29,19,31,34,25,35,38,20,28,32,28,27,25,26,25,18,17,23,25,25,17,13,22,16,30,22,26,23,41,36,30,57,33,34,42,55,43,50,43,59,49,50,59,46,48,55,51,51,52,49,30,21,17,19,18,18,12,14,9,13:7
9,4,3,7,12,6,9,3,12,7,4,4,5,10,2,9,4,3,7,8,8,3,5,1,9,8,10,6,5,5,3,1,4,2,4,2,7,5,10,3,6,3,2,3,2,3,3,2,5,3,2,1,2,4,3,2,5,5,2,8,2,4,3,5,3,6,1,5,5,5,5,5,6,3,3,12,6,12,15,15,7,11,11,10,12,6,11,13,7,16,9,16,10,15,13,7,20,17,11,14,13,10,16,16,26,19,16,14,17,14,25,23,19,16,28,16,22,22,21,22,27,25,28,25,19,26,17,26,22,11,21,18,24,19,30,20,19,26,27,33,33,17,34,21,19,16,29,24,23,26,28,32,33,20,27,25,14,27,22,35,25,26,33,38,24,28,36,24,26,29,23,36,24,30,34,18,35,20,19,41,33,23,28,29,26,25,27,31,21,17,36,27,24,42,21,25,25,30,33,28,29,30,35,42,39,37,53,34,38,32,30,27,31,22,36,22,17,19,24,8,26,15,26,28,22,18,21,22,28,23,11,21,27,13,20,23,34,24,19,28,26,16,30,14,12,24,19,29,13,22,13,13,14,16,30,10,20,16,19,21,13,24,14,18,12,14,32,20,9,34,31,22,21,17,8,13,27,21,11,15,15,14,15,9,13,14,9,11:7
16,11,5,8,3,6,11,10,4,8,9,4,6,8,2,9,3,14,7,2,3,8,3,6,2,8,7,3,5,12,9,4,7,4,2,3,1,3,2,6,2,2,3,4,2,2,3,2,3,5,4,0,5,0,3,3,4,0,2,3,10,3,2,3,5,8,4,2,3,6,6,4,4,8,6,10,6,11,12,7,17,14,9,14,5,9,14,10,10,14,19,20,14,10,20,13,20,17,16,14,13,12,15,19,24,24,10,17,29,25,20,19,20,30,22,25,30,23,17,33,14,20,24,17,14,15,22,22,26,25,23,20,25,29,24,22,23,30,19,26,23,20,21,23,33,22,13,22,23,23,15,17,24,28,16,17,30,17,29,27,38,26,33,40,26,24,41,29,28,26,33,19,35,32,31,23,24,26,29,24,22,29,23,18,19,29,41,26,36,34,27,28,33,46,50,38,47,46,42,50,54,36,46,39,34,58,50,33,43,25,29,37,41,27,24,18,12,24,25,22,18,10,18,20,48,27,22,22,17,31,19,29,23,26,31,28,16,28,31,17,20,18,30,10,10,19,24,13,13,21,14,22,7,19,12,21,26,30,22,28,21,28,14,20,26,18,18,23,15,16,23,22,27,34,28,26,17,17,21,23,18,28,12,22,21,16,21,6:7
